#ifndef PYTERNARY_TORIC_HPP
#define PYTERNARY_TORIC_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pyternary {

// Convex hull of triangles T_{m_i} stacked over the vertices of a simplex:
// layer i (1-based) carries the lattice triangle of size m_i at z = e_{i-1},
// with e_0 = 0.  Generators of degree exactly d contribute cone points
// instead of a layer.  H-representation (height-1 cross sections):
//   x >= 0, y >= 0, z_j >= 0, sum z_j <= 1,
//   x + y <= m_1 + sum_j (m_{j+1} - m_1) z_j.
struct StackedPolytope {
    int d = 0;
    std::vector<int> m; // triangle sizes, nonincreasing, all >= 1
    int cone_count = 0; // generators with q_i = d

    int layers() const { return static_cast<int>(m.size()); } // s'
    int dim() const { return layers() + 1; }                  // D

    // Index set, one (i, j, k) per lattice point of layer i's triangle.
    std::vector<std::array<int, 3>> omega;

    // Embedded coordinates (x, y, z_1..z_{s'-1}) in the layer order of omega.
    std::vector<std::vector<int>> ambient_points() const;
};

enum class VarietyClass { minimal, almost_minimal_acm, other };

const char* variety_class_name(VarietyClass c);

// Derived lattice/variety data for one stacked polytope, after coning.
// Cones add one to the dimension each and leave degree and codimension
// unchanged.
struct ToricSummary {
    long long points = 0;   // r = |omega|
    int base_dim = 0;       // D
    long long codim = 0;    // r - 1 - D
    long long degree = 0;   // normalized volume
    bool idp = false;
    int cone_count = 0;
    int dim = 0; // D + cone_count
    VarietyClass cls = VarietyClass::other;
    std::optional<int> py_bound;
    std::vector<mpq_class> ehrhart_coeffs; // ascending degree
    std::vector<std::string> assumptions;
};

// Builds the polytope for generator degrees Q at level d.  Degrees above d
// are ignored, degrees equal to d become cone points.  Throws
// NoLowDegreeGenerators when no generator has degree < d.
StackedPolytope build_polytope(int d, const std::vector<int>& gens);

// |tK \cap Z^{D}| by closed-form summation over integer simplex weights:
// sum over u >= 0, |u| = t of (M+1)(M+2)/2 with M = sum m_i u_i.
long long dilate_count(const StackedPolytope& p, long long t);

// Lattice points of the dilate tK, in a fixed deterministic order.
std::vector<std::vector<int>> dilate_points(const StackedPolytope& p, long long t);

// Exact Ehrhart polynomial (degree D) interpolated at t = 0..D, returned as
// ascending coefficients.  Verified against dilate_count at t = D+1 and D+2;
// throws InterpolationMismatch when the check fails.
std::vector<mpq_class> ehrhart(const StackedPolytope& p);

// D! times the leading Ehrhart coefficient.
long long normalized_volume(const StackedPolytope& p);

// Integer decomposition property: tK cap Z = (K cap Z) + ((t-1)K cap Z) for
// all t = 2..D+1.  The left-to-right containment is unconditional and
// asserted; equality is the actual test.
bool idp_check(const StackedPolytope& p);

// minimal           iff degree = codim + 1        -> py = dim + 1
// almost-minimal    iff degree = codim + 2 and IDP -> py = dim + 2
// other             otherwise                      -> no bound
ToricSummary classify(const StackedPolytope& p);

} // namespace pyternary

#endif
