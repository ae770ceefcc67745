#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qv/quiver.hpp"
#include "qv/scalar.hpp"

namespace qv::atlas {

enum class Family {
    GlmGln,     // GL_m x GL_n on m x n matrices
    Skew,       // GL_n on skew-symmetric n x n matrices
    Symmetric,  // GL_n on symmetric n x n matrices
    Sp2nGl2,
    Sp2nGl3,
    Sp4Glm,     // m > 4
    Sp4Gl4,
    Sp2n,       // Sp_2n on its defining space
    Spin10,
    SoN,        // SO_n x C* on C^n
    Spin7,
    Spin9,
    G2,
    E6,
};

struct CaseId {
    Family family;
    int m = 0;
    int n = 0;

    std::string to_string() const;
};

std::string family_tag(Family f);
Family family_from_tag(const std::string& tag);

struct FamilyTemplate {
    Family family;
    std::string tag;
    std::string parameters;   // e.g. "m >= n >= 1"
    std::string description;
};

// the fourteen family templates
std::vector<FamilyTemplate> list_cases();

struct OrbitInfo {
    std::string label;
    long long codim = 0;
    int component_group_order = 1;
};

struct SemiInvariant {
    int degree = 0;
    std::vector<Rational> roots;  // distinct roots of the b-function
};

struct FourierData {
    // unordered 2-cycles and fixed points of the involution, on vertex labels;
    // partial = true when only part of the involution is recorded
    std::vector<std::pair<std::string, std::string>> pairs;
    bool partial = false;
};

struct CaseRecord {
    CaseId id;
    long long dim_space = 0;
    std::vector<OrbitInfo> orbits;
    // full strict containment relation: (a, b) means orbit a lies in the
    // closure of orbit b
    std::vector<std::pair<int, int>> closure;
    QuiverPresentation quiver;
    std::vector<int> vertex_orbit;  // vertex index -> orbit index
    std::optional<SemiInvariant> semi_invariant;
    std::optional<FourierData> fourier;
    std::vector<std::string> notes;

    int orbit_index(const std::string& label) const;
    bool closure_leq(int a, int b) const;  // reflexive order
};

CaseRecord get_case(const CaseId& id);

long long orbit_codim(const CaseId& id, const std::string& label);

std::optional<FourierData> fourier_permutation(const CaseId& id);

struct PyasetskiiData {
    std::vector<std::pair<std::string, std::string>> pairs;  // orbit labels
    bool partial = false;
};
std::optional<PyasetskiiData> pyasetskii(const CaseId& id);

struct CharCycle {
    bool known = false;  // false: multiplicity-free with components undetermined
    std::vector<std::pair<std::string, int>> components;  // (orbit label, multiplicity)
};
CharCycle characteristic_cycle(const CaseId& id, const std::string& vertex);

// row of the Cartan matrix at the given vertex
std::vector<long long> projective_cover_dims(const CaseId& id, const std::string& vertex);

struct InvariantCheck {
    std::string name;
    bool pass = false;
    std::string note;
};
std::vector<InvariantCheck> verify_case_invariants(const CaseId& id);

// every case id with parameters in the grid [lo, hi] (inclusive)
std::vector<CaseId> grid_cases(int lo, int hi);

}  // namespace qv::atlas
