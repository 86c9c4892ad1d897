// atlas: command line front end for the K3 / Borcea-Voisin toolkit
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "k3bv/atlas.hpp"
#include "k3bv/bv.hpp"
#include "k3bv/involutions.hpp"
#include "k3bv/nikulin.hpp"
#include "k3bv/singular.hpp"
#include "k3bv/zeta.hpp"

using namespace k3bv;

namespace {

const char *VARS = "xyzw";

std::vector<int64_t> parse_ints(std::string s) {
    for (char &c : s)
        if (c == '(' || c == ')' || c == ',') c = ' ';
    std::istringstream is(s);
    std::vector<int64_t> v;
    int64_t x;
    while (is >> x) v.push_back(x);
    return v;
}

// the record for id, or its alternative with the given involution variable
K3Record pick(const Dataset &d, int id, std::optional<int> var) {
    const K3Record &r = d.by_id(id);
    if (!var || (r.involution_variable && *r.involution_variable == *var)) return r;
    for (auto &a : d.alternatives)
        if (a.id == id && a.involution_variable == var) return a;
    K3Record c = r;
    c.involution_variable = var;
    c.expected_r.reset();
    c.expected_a.reset();
    return c;
}

int cmd_nikulin(const Dataset &d, int id, std::optional<int> var) {
    K3Record r = pick(d, id, var);
    if (!r.equation || !r.involution_variable) throw std::invalid_argument("#" + std::to_string(id) + " has no equation with an involution");
    const WPolynomial &F = *r.equation;
    std::cout << "#" << id << "  " << F.weight.str() << "  " << F.str(VARS) << "\n";
    std::cout << "involution on " << VARS[*r.involution_variable] << "\n";
    auto sings = singular_loci(F);
    for (auto &s : sings)
        std::cout << "  singular: " << s.shorthand() << " (" << s.type() << ") x" << s.point_count << "\n";
    auto rep = fixed_locus(F, *r.involution_variable, sings);
    for (auto &c : rep.components) std::cout << "  fixed: genus " << c.genus << "  " << c.provenance << "  " << c.detail << "\n";
    for (auto &e : rep.exceptional) {
        std::cout << "  exceptional " << e.sing.shorthand() << ": " << e.label;
        if (e.swapped) std::cout << " (points swapped)";
        else {
            std::cout << " fixed E";
            for (size_t i = 0; i < e.fixed_indices.size(); ++i) std::cout << (i ? ",E" : "") << e.fixed_indices[i];
            if (e.fixed_indices.empty()) std::cout << " none";
        }
        std::cout << "\n";
    }
    auto t = nikulin_invariants(rep);
    std::cout << "(g,k) = (" << rep.g << "," << rep.k << ")  (r,a) = (" << t.r << "," << t.a << ")";
    if (r.expected_r) std::cout << "  printed (" << *r.expected_r << "," << *r.expected_a << ")";
    std::cout << "\n";
    return r.expected_r && (t.r != *r.expected_r || t.a != *r.expected_a) ? 1 : 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"atlas: K3 surfaces with non-symplectic involution and Borcea-Voisin threefolds"};
    app.require_subcommand(1);
    std::string dataset_path;
    app.add_option("--dataset", dataset_path, "dataset JSON file (default: ATLAS_DATASET, else the embedded copy)");

    auto *weights = app.add_subcommand("weights", "weight records");
    auto *wlist = weights->add_subcommand("list", "list all weights");
    weights->require_subcommand(1);

    std::string search_arg;
    auto *search = app.add_subcommand("search", "Delsarte equations with an involution for a weight or record id");
    search->add_option("target", search_arg, "id or weight like 5,4,3,2")->required();

    int id = 0;
    std::optional<int> var;
    auto *nik = app.add_subcommand("nikulin", "fixed locus and (r,a)");
    nik->add_option("id", id)->required();
    nik->add_option("--var", var, "involution variable index 0..3");

    auto *hodge = app.add_subcommand("hodge", "Borcea-Voisin Hodge numbers");
    hodge->add_option("id", id)->required();

    std::string curve = "e2";
    auto *twist = app.add_subcommand("twist", "weighted model of the Borcea-Voisin threefold");
    twist->add_option("id", id)->required();
    twist->add_option("--curve", curve)->check(CLI::IsMember({"e2", "e3"}));

    auto *mirror = app.add_subcommand("mirror", "mirror triplet and partners");
    mirror->add_option("id", id)->required();

    auto *zeta = app.add_subcommand("zeta", "finite field layer");
    zeta->require_subcommand(1);
    int64_t p = 0;
    int m = 0;
    std::string avec;
    auto *zcount = zeta->add_subcommand("count", "point counts and the Euler factor");
    zcount->add_option("--id", id)->required();
    zcount->add_option("-p", p)->required();
    auto *zjac = zeta->add_subcommand("jacobi", "weighted Jacobi sum");
    zjac->add_option("-p", p)->required();
    zjac->add_option("-m", m)->required();
    zjac->add_option("-a", avec, "a0,a1,a2,a3")->required();

    int tnum = 0;
    std::string format = "csv";
    bool diff = false;
    auto *table = app.add_subcommand("table", "reproduce a table");
    table->add_option("k", tnum, "0..10")->required()->check(CLI::Range(0, 10));
    table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    table->add_flag("--diff", diff, "report mismatches against the printed values");

    auto *verify = app.add_subcommand("verify", "run every check");

    CLI11_PARSE(app, argc, argv);

    try {
        Dataset d = dataset_path.empty() ? load_dataset() : ingest_file(dataset_path);
        if (wlist->parsed()) {
            for (auto &r : d.records)
                std::cout << r.id << "\t" << r.weight.str() << "\tdegree " << r.weight.sum() << "\ttable " << r.source_table
                          << (r.equation && r.equation->delsarte() ? "\tDelsarte" : "") << "\n";
            return 0;
        }
        if (search->parsed()) {
            auto v = parse_ints(search_arg);
            Weight w = v.size() == 1 ? d.by_id(int(v[0])).weight : Weight(v);
            auto cands = delsarte_search(w);
            std::cout << w.str() << ": " << cands.size() << " candidates\n";
            for (auto &c : cands)
                std::cout << "  " << c.equation.str(VARS) << "  sigma on " << VARS[c.variable_index] << "  "
                          << class_name(c.classification) << "\n";
            return 0;
        }
        if (nik->parsed()) return cmd_nikulin(d, id, var);
        if (hodge->parsed()) {
            auto t = compute_invariants(d.by_id(id));
            auto h = hodge_numbers(t.r, t.a);
            std::cout << "(r,a) = (" << t.r << "," << t.a << ")  h11 = " << h.h11 << "  h21 = " << h.h21 << "  e = " << h.euler << "\n";
            return 0;
        }
        if (twist->parsed()) {
            const K3Record &r = d.by_id(id);
            TwistModel tm = has_special_twist_model(id) && (!r.involution_variable || *r.involution_variable != 0)
                                ? special_twist_model(id)
                                : twist_model(*r.equation, curve == "e2" ? Curve::E2 : Curve::E3);
            std::cout << tm.weight5.str() << "  degree " << tm.degree << "  " << tm.equation.str() << "\n";
            std::cout << "curve " << curve_name(tm.curve) << (tm.quasi_smooth ? "" : "  (not quasi-smooth)")
                      << (tm.note.empty() ? "" : "  " + tm.note) << "\n";
            return 0;
        }
        if (mirror->parsed()) {
            const K3Record &r = d.by_id(id);
            auto t = compute_invariants(r);
            auto mt = mirror_triplet(t);
            std::cout << "(r,a) = (" << t.r << "," << t.a << ")  ";
            if (mt.mirror) std::cout << "mirror (" << mt.mirror->r << "," << mt.mirror->a << ")" << (mt.conditional ? " (conditional on delta)" : "");
            else std::cout << "no mirror: " << mt.reason;
            std::cout << "\n";
            for (auto &mp : d.mirror_pairs)
                if (mp.id == id)
                    for (auto &q : mp.partners) std::cout << "  partner #" << q.id << " " << q.weight.str() << " printed 20-r " << q.printed_r << "\n";
            return 0;
        }
        if (zcount->parsed()) {
            const K3Record &r = d.by_id(id);
            if (!r.equation) throw std::invalid_argument("no equation");
            const WPolynomial &F = *r.equation;
            std::cout << "#" << id << " over F_" << p << "\n";
            std::cout << "  brute force: " << count_points_bruteforce(F, p) << "\n";
            if (F.diagonal()) {
                try {
                    std::cout << "  character sum: " << count_points_charsum(F, p) << "\n";
                } catch (const ZetaUnsupported &e) {
                    std::cout << "  character sum: " << e.what() << "\n";
                }
                auto K = k3_euler_factor(F, p);
                std::cout << "  resolution correction: " << K.delta << "\n";
                std::cout << "  euler factor: " << K.factor.to_json() << "\n";
                std::cout << "  character part: " << K.character.to_json() << "\n";
            }
            return 0;
        }
        if (zjac->parsed()) {
            CharVector a{m, parse_ints(avec)};
            Cyclo j = jacobi_sum(p, a);
            std::cout << "j = " << j.str() << "  (z = exp(2 pi i/" << m << "))\n";
            std::cout << "|j| = p^(n/2) under all embeddings: " << (jacobi_absolute_value_ok(j, p, a.n()) ? "yes" : "no") << "\n";
            return 0;
        }
        if (table->parsed()) {
            auto t = reproduce_table(d, tnum);
            std::cout << (format == "csv" ? to_csv(t) : to_json(t));
            if (diff) {
                for (auto &s : t.diffs) std::cerr << "diff: " << s << "\n";
                std::cerr << t.diffs.size() << " differences\n";
                return t.diffs.empty() ? 0 : 1;
            }
            return 0;
        }
        if (verify->parsed()) {
            auto rep = verify_all(d);
            for (auto &c : rep.checks) std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
            std::cout << "checks: " << rep.checks.size() << ", failures: " << rep.failures() << "\n";
            return rep.failures() ? 1 : 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
