#ifndef RSVD_ALGEBRA_HPP
#define RSVD_ALGEBRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "rsvd/types.hpp"

namespace rsvd {

/// Defining form of the pseudo-unitary symmetry: C = [[0, 1_n], [1_n, 0]].
/// The group is G = {y : y* C y = C}; its Lie algebra is
/// g = {Y : Y* C + C Y = 0}.
Matrix build_c(Dimension dim);

/// Diagonal matrix Lambda = diag(lambda_1..lambda_n, -lambda_1..-lambda_n).
Matrix lambda_matrix(const RVector& lambda);

/// Residual of the Lie-algebra membership condition, ||Y* C + C Y||_F.
double algebra_residual(const Matrix& Y);

/// Residual of the group membership condition, ||y* C y - C||_F.
double group_residual(const Matrix& y);

/// True iff Y lies in the Lie algebra g within tol * (1 + ||Y||_F).
bool in_algebra(const Matrix& Y, double tol = 1e-10);

/// Throws MembershipError unless in_algebra(Y, tol).
void require_algebra(const Matrix& Y, double tol = 1e-10);

/// Orthogonal decomposition Y = Y_plus + Y_minus into the anti-Hermitian
/// (compact) part Y_plus = (Y - Y*)/2 and the Hermitian part Y_minus = (Y + Y*)/2.
std::pair<Matrix, Matrix> cartan_split(const Matrix& Y);

/// Finer decomposition Y = Y_m + Y_mperp + Y_a + Y_aperp where Y_m / Y_a are
/// the diagonal parts of the anti-Hermitian / Hermitian components and
/// Y_mperp / Y_aperp the corresponding off-diagonal parts.
struct RefinedParts {
  Matrix m;       ///< diagonal, anti-Hermitian (centralizer of the chamber)
  Matrix m_perp;  ///< off-diagonal, anti-Hermitian
  Matrix a;       ///< diagonal, Hermitian (the chamber directions)
  Matrix a_perp;  ///< off-diagonal, Hermitian
};
RefinedParts refined_split(const Matrix& Y);

/// Ad-invariant bilinear form <Y1, Y2> = tr(Y1 Y2); real on g x g.
double bilinear(const Matrix& Y1, const Matrix& Y2);

// ---------------------------------------------------------------------------
// Root system and adapted basis
// ---------------------------------------------------------------------------

/// Positive roots of type BC_n (long roots 2 e_c carry kind Long with a = b = c).
enum class RootKind { Difference, Sum, Long };

struct Root {
  RootKind kind;
  int a;  ///< 0-based particle index
  int b;  ///< 0-based particle index; equals a for Long roots

  /// alpha(lambda): lambda_a - lambda_b, lambda_a + lambda_b, or 2 lambda_c.
  double value(const RVector& lambda) const;
  std::string name() const;
  bool operator==(const Root& other) const;
};

enum class Flavor { Real, Imag };

/// One element of the orthogonal basis of g adapted to the refined split.
struct BasisElement {
  enum class Kind { DPlus, DMinus, XPlus, XMinus };
  Kind kind;
  int c;          ///< particle index for D elements, -1 for root vectors
  Root root;      ///< root label for X elements (ignored for D elements)
  Flavor flavor;  ///< flavor for X elements (ignored for D elements)
  Matrix matrix;
  double signature;  ///< <v, v> = +1 or -1
  std::string name;
};

/// Enumerates the N^2 basis elements of g in a fixed documented order:
/// D_1^+..D_n^+, D_1^-..D_n^-, then per positive root (difference roots in
/// lexicographic (a,b) order, then sum roots, then long roots ascending) the
/// flavors (+,r), (+,i), (-,r), (-,i); long roots only carry the imaginary
/// flavors (+,i), (-,i).
class Basis {
 public:
  explicit Basis(Dimension dim);

  Dimension dim() const { return dim_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const BasisElement& operator[](int i) const;

  const Matrix& d_plus(int c) const;   ///< D_c^+ = (i/sqrt2)(e_cc + e_{n+c,n+c})
  const Matrix& d_minus(int c) const;  ///< D_c^- = (1/sqrt2)(e_cc - e_{n+c,n+c})

  /// Root vector X_alpha^{+,flavor} (anti-Hermitian) resp. X_alpha^{-,flavor}
  /// (Hermitian). Throws IndexError for a real flavor on a long root.
  const Matrix& x_plus(const Root& alpha, Flavor flavor) const;
  const Matrix& x_minus(const Root& alpha, Flavor flavor) const;

  const std::vector<Root>& roots() const { return roots_; }

  /// All (root, flavor) pairs in enumeration order, with the indices of the
  /// X^+ and X^- partners inside the element list.
  struct XPair {
    Root root;
    Flavor flavor;
    int plus_index;
    int minus_index;
  };
  const std::vector<XPair>& x_pairs() const { return pairs_; }

  const std::vector<BasisElement>& elements() const { return elements_; }

  /// Coefficients of Y on this basis (real for Y in g): c_v = <v, Y> / <v, v>.
  RVector expand(const Matrix& Y) const;

 private:
  int x_index(const Root& alpha, Flavor flavor, bool plus) const;

  Dimension dim_;
  std::vector<BasisElement> elements_;
  std::vector<Root> roots_;
  std::vector<XPair> pairs_;
};

// ---------------------------------------------------------------------------
// Diagonal adjoint action
// ---------------------------------------------------------------------------

/// ad_Lambda(Y) = [Lambda, Y] with Lambda = lambda_matrix(lambda).
Matrix ad_lambda(const RVector& lambda, const Matrix& Y);

/// Default regularity margin below which a root value alpha(lambda) counts
/// as a chamber-wall collision: 1e-8 * max(1, ||lambda||_inf).
double regularity_margin(const RVector& lambda);

/// Inverse of ad_Lambda on its image m_perp + a_perp: expands Z on the root
/// vectors, divides by alpha(lambda) and swaps the +/- partners.
/// Throws RegularityError if some |alpha(lambda)| < margin and DomainError if
/// Z has diagonal components above 1e-10 * (1 + ||Z||_F).
Matrix ad_lambda_inverse(const Basis& basis, const RVector& lambda, const Matrix& Z,
                         double margin = -1.0);

}  // namespace rsvd

#endif  // RSVD_ALGEBRA_HPP
