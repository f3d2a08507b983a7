#pragma once

/**
 * @file gallery.hpp
 * @brief Constructors and closed-form determinant values for the classical
 *        frieze families: constant weak friezes on dissections
 *        (Bessenrodt-Holm-Jorgensen), Conway-Coxeter friezes from
 *        triangulations (Broline-Crowe-Isaacs), symbolic cluster-variable
 *        friezes (Baur-Marsh), and frieze matrices satisfying the
 *        generalized diamond rule (Maldonado). Plus seeded random
 *        generators for property testing.
 */

#include "frieze/frieze_matrix.hpp"
#include "frieze/rng.hpp"

namespace frieze {

struct SizeMismatch : Error {
    using Error::Error;
};

struct DiamondRuleViolated : Error {
    using Error::Error;
};

struct InvalidMatrix : Error {
    using Error::Error;
};

/// All diagonals carry v; the dissection is empty, so any value (zero
/// included) is a weak frieze.
WeakFrieze constant_frieze(int n, const Scalar& v);

/// Glue of constant-1 pieces over the cells of D. On a triangulation this
/// is the Conway-Coxeter frieze; in general every diagonal crossing r
/// dissection diagonals of the all-squares octagon example carries 2^r.
WeakFrieze dissection_frieze(int n, const Dissection& D);

/// (-1)^{n-1} * prod(d_i - 1) for a dissection with cell sizes d_1..d_l;
/// requires sum(d_i) - 2(l-1) = n.
Scalar bhj_det_formula(int n, const std::vector<int>& cell_sizes);

/// A dissection with exactly n-3 diagonals (every cell a triangle).
class Triangulation {
public:
    explicit Triangulation(Dissection d);
    const Dissection& dissection() const { return d_; }
    int polygon_size() const { return d_.polygon_size(); }

private:
    Dissection d_;
};

/// The symbolic frieze of a triangulation: one indeterminate x_<i>_<j> per
/// boundary edge and per triangulation diagonal, all other diagonals
/// resolved by gluing. The values are the type-A cluster variables attached
/// to the diagonals; the result satisfies all Ptolemy relations.
WeakFrieze baur_marsh_frieze(const Triangulation& t);

/// -(-2)^{n-2} * product of the boundary edge values of f.
Scalar bm_det_formula(const WeakFrieze& f);

/// Symmetric matrix with c_{i,j} = 0 iff i = j, the carrier for the
/// generalized diamond rule checks.
class MaldonadoMatrix {
public:
    explicit MaldonadoMatrix(ScalarMatrix m);
    const ScalarMatrix& matrix() const { return m_; }
    int size() const { return m_.size(); }
    /// 1-based entry c_{i,j}.
    const Scalar& entry(int i, int j) const { return m_.at(i - 1, j - 1); }

private:
    ScalarMatrix m_;
};

struct DiamondViolation {
    int i, j; // 1-based
    Scalar lhs, rhs;
};

struct DiamondReport {
    std::vector<DiamondViolation> violations;
    std::size_t relations_checked = 0;
    bool pass() const { return violations.empty(); }
};

/// Generalized diamond rule c_{i,j} c_{i+1,j+1} - c_{i+1,j} c_{i,j+1} =
/// c_{i,i+1} c_{j,j+1} for all n-1 >= j >= i+1 >= 2 (the last column is not
/// constrained directly).
DiamondReport maldonado_check(const MaldonadoMatrix& c);

/// -(-2)^{n-2} c_{1,n} prod_{i<n} c_{i,i+1}; throws DiamondRuleViolated when
/// maldonado_check fails.
Scalar maldonado_det_formula(const MaldonadoMatrix& c);

/// The derived identities at the glide overlap:
/// c_{i,n} c_{1,i+1} - c_{i+1,n} c_{1,i} = c_{i,i+1} c_{1,n} for 1 <= i <= n-1.
DiamondReport overlap_identity_check(const MaldonadoMatrix& c);

enum class RandomMode { any, triangulation };

/// Deterministic in the seed; generated by recursively splitting cells
/// along random chords (not uniform over dissections). Triangulation mode
/// always yields exactly n-3 diagonals.
Dissection random_dissection(int n, std::uint64_t seed, RandomMode mode);

struct RandomFrieze {
    WeakFrieze frieze;
    int attempts; // reseeds consumed when a resolved value collided to zero
};

/// Independent nonzero rational values (numerator and denominator in
/// [1,20], random sign) on every piece diagonal, then glued along D. A
/// resolved value that collides to zero aborts the attempt and reseeds.
RandomFrieze random_weak_frieze(int n, const Dissection& D, std::uint64_t seed);

/// Random nonzero rational; positive_only skips the sign flip.
Rational random_nonzero_rational(Rng& rng, bool positive_only);

/// A random nonzero rational value per name.
std::map<std::string, Rational> random_rational_point(const std::vector<std::string>& names, Rng& rng,
                                                      bool positive_only);

/// Evaluate every value of a symbolic weak frieze at a rational point.
WeakFrieze evaluate_frieze(const WeakFrieze& f, const std::map<std::string, Rational>& point);

} // namespace frieze
