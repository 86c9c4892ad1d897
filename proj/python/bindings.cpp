// python view of the toolkit: records, invariants, tables, zeta
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "k3bv/atlas.hpp"
#include "k3bv/bv.hpp"
#include "k3bv/nikulin.hpp"
#include "k3bv/quasismooth.hpp"
#include "k3bv/singular.hpp"
#include "k3bv/zeta.hpp"

namespace py = pybind11;
using namespace k3bv;

namespace {

const Dataset &data() {
    static Dataset d = load_dataset();
    return d;
}

py::int_ pyint(const BigInt &b) { return py::int_(py::str(b.str()).attr("__int__")()); }

py::list factor_list(const EulerFactor &f) {
    py::list out;
    for (auto &c : f.coefficients) out.append(pyint(c));
    return out;
}

WPolynomial make_poly(const std::vector<int64_t> &w, const std::vector<int64_t> &c, const std::vector<Exponent> &e) {
    return WPolynomial(Weight(w), c, e);
}

const WPolynomial &equation_of(int id) {
    const K3Record &r = data().by_id(id);
    if (!r.equation) throw std::invalid_argument("#" + std::to_string(id) + " has no equation");
    return *r.equation;
}

}  // namespace

PYBIND11_MODULE(_k3atlas, m) {
    m.doc() = "K3 surfaces with non-symplectic involution, Borcea-Voisin threefolds";

    py::register_exception<NotQuasiSmooth>(m, "NotQuasiSmooth", PyExc_ValueError);
    py::register_exception<Unsupported>(m, "Unsupported", PyExc_RuntimeError);
    py::register_exception<NoMirror>(m, "NoMirror", PyExc_RuntimeError);
    py::register_exception<ZetaUnsupported>(m, "ZetaUnsupported", PyExc_RuntimeError);

    py::class_<WPolynomial>(m, "WPolynomial")
        .def(py::init(&make_poly), py::arg("weight"), py::arg("coefs"), py::arg("exps"))
        .def_property_readonly("weight", [](const WPolynomial &F) { return F.weight.w; })
        .def_readonly("coefs", &WPolynomial::coefs)
        .def_readonly("exps", &WPolynomial::exps)
        .def_readonly("degree", &WPolynomial::degree)
        .def("delsarte", &WPolynomial::delsarte)
        .def("diagonal", &WPolynomial::diagonal)
        .def("__str__", [](const WPolynomial &F) { return F.str("xyzw"); });

    m.def("record_ids", [] {
        std::vector<int> ids;
        for (auto &r : data().records) ids.push_back(r.id);
        return ids;
    });
    m.def("record", [](int id) {
        const K3Record &r = data().by_id(id);
        py::dict d;
        d["id"] = r.id;
        d["weight"] = r.weight.w;
        d["table"] = r.source_table;
        d["equation"] = r.equation ? py::cast(*r.equation) : py::none();
        d["involution_variable"] = r.involution_variable;
        d["printed_r"] = r.expected_r;
        d["printed_a"] = r.expected_a;
        return d;
    }, py::arg("id"));
    m.def("equation", &equation_of, py::arg("id"), py::return_value_policy::copy);

    m.def("normalize_weight", [](const std::vector<int64_t> &w) { return normalize_weight(Weight(w)).w; });
    m.def("monomials_of_degree", [](const std::vector<int64_t> &w, int64_t d) { return monomials_of_degree(Weight(w), d); });

    m.def("quasismooth", [](const WPolynomial &F) {
        auto v = quasismooth_full(F);
        py::dict d;
        d["combinatorial"] = v.combinatorial_pass;
        d["exact"] = v.exact_pass;
        d["diagnostic"] = v.diagnostic;
        return d;
    });
    m.def("singular_loci", [](const WPolynomial &F) {
        py::list out;
        for (auto &s : singular_loci(F)) {
            py::dict d;
            d["shorthand"] = s.shorthand();
            d["type"] = s.type();
            d["points"] = s.point_count;
            d["n"] = s.n;
            d["q"] = s.q;
            d["chain"] = s.chain;
            out.append(d);
        }
        return out;
    });
    m.def("exceptional_rank", py::overload_cast<const WPolynomial &>(&exceptional_rank));

    m.def("fixed_locus", [](const WPolynomial &F, int var) {
        auto rep = fixed_locus(F, var);
        auto t = nikulin_invariants(rep);
        py::dict d;
        d["type"] = rep.type == FixedType::I ? "I" : rep.type == FixedType::II ? "II" : "III";
        d["g"] = rep.g;
        d["k"] = rep.k;
        d["r"] = t.r;
        d["a"] = t.a;
        d["delta"] = t.delta;
        py::list comps;
        for (auto &c : rep.components) comps.append(py::make_tuple(c.genus, c.provenance, c.detail));
        d["components"] = comps;
        return d;
    }, py::arg("F"), py::arg("var"));
    m.def("invariants", [](int id) {
        auto t = compute_invariants(data().by_id(id));
        return py::make_tuple(t.r, t.a);
    }, py::arg("id"));
    m.def("r_closed_formula", &r_closed_formula);
    m.def("mirror", [](int r, int a) -> py::object {
        auto mt = mirror_triplet(NikulinInvariants{r, a, {}});
        if (!mt.mirror) return py::none();
        return py::make_tuple(mt.mirror->r, mt.mirror->a);
    }, py::arg("r"), py::arg("a"));

    m.def("hodge_numbers", [](int r, int a) {
        auto h = hodge_numbers(r, a);
        return py::make_tuple(h.h11, h.h21);
    }, py::arg("r"), py::arg("a"));

    m.def("reproduce_table", [](int k) {
        auto t = reproduce_table(data(), k);
        py::dict d;
        d["title"] = t.title;
        d["header"] = t.header;
        d["rows"] = t.rows;
        d["diffs"] = t.diffs;
        return d;
    }, py::arg("k"));
    m.def("table_csv", [](int k) { return to_csv(reproduce_table(data(), k)); }, py::arg("k"));
    m.def("verify", [] {
        auto rep = verify_all(data());
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (auto &c : rep.checks) out.emplace_back(c.name, c.pass, c.detail);
        return out;
    });

    m.def("jacobi_sum", [](int64_t p, int mm, const std::vector<int64_t> &a) {
        CharVector v{mm, a};
        Cyclo j = jacobi_sum(p, v);
        return py::make_tuple(j.str(), jacobi_absolute_value_ok(j, p, v.n()));
    }, py::arg("p"), py::arg("m"), py::arg("a"));
    m.def("count_points", [](const WPolynomial &F, int64_t p, bool charsum) {
        return charsum ? count_points_charsum(F, p) : count_points_bruteforce(F, p);
    }, py::arg("F"), py::arg("p"), py::arg("charsum") = false);
    m.def("k3_euler_factor", [](const WPolynomial &F, int64_t p) {
        auto K = k3_euler_factor(F, p);
        py::dict d;
        d["factor"] = factor_list(K.factor);
        d["character"] = factor_list(K.character);
        d["delta"] = K.delta;
        return d;
    }, py::arg("F"), py::arg("p"));
    m.def("ap_elliptic", [](const std::string &model, int64_t p) {
        EllipticCurve E;
        E.model = model == "E3" ? EllipticModel::E3 : EllipticModel::E2;
        return ap_elliptic(E, p);
    }, py::arg("model"), py::arg("p"));
}
