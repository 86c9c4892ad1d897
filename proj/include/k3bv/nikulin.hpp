#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3bv/singular.hpp"
#include "k3bv/wps.hpp"

namespace k3bv {

// I: curve of genus g plus k rational curves; II: empty; III: two elliptic curves
enum class FixedType { I, II, III };

struct FixedComponent {
    int genus = 0;
    std::string provenance;  // coordinate-section, coordinate-stratum, exceptional-divisor
    std::string detail;
};

struct ExceptionalAction {
    QuotientSingularity sing;
    bool swapped = false;          // sigma permutes the points of the stratum
    std::string label;             // vertex-on-fixed-section, vertex-negated, edge-on-fixed-section, edge-off-section
    std::vector<int> fixed_indices;  // 1-based positions in the chain
};

struct FixedLocusReport {
    FixedType type = FixedType::I;
    int g = 0;
    int k = 0;
    std::vector<FixedComponent> components;
    std::vector<ExceptionalAction> exceptional;
};

struct NikulinInvariants {
    int r = 0;
    int a = 0;
    std::optional<int> delta;
    bool operator==(const NikulinInvariants &o) const { return r == o.r && a == o.a && delta == o.delta; }
};

void validate(const NikulinInvariants &t);

// genus of a quasi-smooth curve of degree d in normalized P^2(w1,w2,w3)
int64_t fixed_curve_genus(const Weight &w3, const WPolynomial &f);

FixedLocusReport fixed_locus(const WPolynomial &F, int i);
FixedLocusReport fixed_locus(const WPolynomial &F, int i, const std::vector<QuotientSingularity> &sings);

NikulinInvariants nikulin_invariants(const FixedLocusReport &rep);
NikulinInvariants nikulin_invariants(int g, int k);

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool borcea_form(const WPolynomial &F);
// closed formula for r assuming the invariant Picard rank of S_0 is one
int64_t r_closed_formula(const WPolynomial &F);

struct MirrorResult {
    std::optional<NikulinInvariants> mirror;
    bool conditional = false;  // depends on the unknown delta
    std::string reason;
};

MirrorResult mirror_triplet(const NikulinInvariants &t);
bool in_pale_region(int r, int a, int delta);

bool lattice_a_check(const std::vector<std::vector<int64_t>> &gram, int a);

struct AtlasEntry {
    int id = 0;
    int variable = 0;
    std::string source;  // "table N" or "alternative"
    std::optional<NikulinInvariants> computed;
    std::optional<NikulinInvariants> expected;
    std::string error;
    bool matches() const;
};

struct AtlasResult {
    std::vector<AtlasEntry> entries;
    std::vector<std::pair<int, int>> pairs;  // distinct computed (r, a), sorted
    std::vector<AtlasEntry> discrepancies;
};

AtlasResult triplet_atlas(const std::vector<K3Record> &records, const std::vector<K3Record> &alternatives);

// the published realized-triplet array, as (r, a) pairs
std::vector<std::pair<int, int>> published_triplet_array();

}  // namespace k3bv
