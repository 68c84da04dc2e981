#pragma once

// Root systems of the simple Lie algebras and Chevalley structure constants.
//
// Conventions:
//  * Simple roots are numbered as in Bourbaki. For E_n the branch node is 2,
//    attached to node 4; B_n has alpha_n short, C_n has alpha_n long, F_4 has
//    alpha_1, alpha_2 long, G_2 has alpha_1 short.
//  * cartan[i][j] = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
//  * Inner products are scaled so the shortest roots have squared length 2
//    (squared lengths are 2, 4 or 6).
//  * Positive roots are sorted by height; ties are broken by reverse
//    lexicographic order of their simple-root coordinates, so the simple roots
//    come first in Bourbaki order.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieidx {

struct CartanType {
  char family = 'A';
  int rank = 1;

  /// "E7", "B3", ...
  std::string name() const;
  bool valid() const;
  /// Parses names like "E7", "b3", "A_5". Throws InputError on bad input.
  static CartanType parse(const std::string& text);

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

using Root = std::vector<int>;  // coordinates over the simple roots

/// Invariant degrees d_1 <= ... <= d_rank of the simple Lie algebra.
std::vector<int> invariant_degrees(const CartanType& t);

struct RootSystemInfo {
  CartanType cartan_type;
  std::vector<std::vector<int>> cartan_matrix;
  std::vector<std::vector<int>> inner_products;  // (alpha_i, alpha_j)
  std::vector<Root> positive_roots;
  std::vector<int> degrees;

  std::size_t rank() const { return cartan_matrix.size(); }
  std::size_t num_positive() const { return positive_roots.size(); }
  std::size_t borel_dim() const { return num_positive() + rank(); }
  std::size_t algebra_dim() const { return 2 * num_positive() + rank(); }

  int height(std::size_t i) const;
  int inner(const Root& a, const Root& b) const;
  /// <alpha_k^vee, beta>
  int pairing(std::size_t k, const Root& beta) const;
  std::optional<std::size_t> positive_index(const Root& r) const;
  bool is_root(const Root& r) const;

  std::map<Root, std::size_t> index;  // positive root -> position
};

/// Throws InputError for an invalid family/rank combination.
RootSystemInfo build_root_system(const CartanType& t);

/// Structure constants of the Chevalley basis
///   x_0 .. x_{P-1}, y_0 .. y_{P-1}, h_0 .. h_{l-1}
/// (x_i = e_{alpha_i}, y_i = e_{-alpha_i}), with [x_i, y_i] = h_{alpha_i}.
/// Signs of N_{alpha,beta} are fixed by declaring every extraspecial pair
/// positive with respect to the positive root order above.
class ChevalleyConstants {
 public:
  explicit ChevalleyConstants(RootSystemInfo rs);

  const RootSystemInfo& roots() const { return roots_; }
  std::size_t dim() const { return roots_.algebra_dim(); }

  /// Root index in [0, 2P): i < P is alpha_i, P + i is -alpha_i.
  int N(std::size_t a, std::size_t b) const;
  /// Coefficients of h_alpha in the basis h_0 .. h_{l-1}.
  const std::vector<int>& coroot(std::size_t positive) const { return coroots_[positive]; }

  struct Term {
    std::size_t index;
    int coeff;
  };
  /// [b_i, b_j] in the Chevalley basis.
  std::vector<Term> bracket(std::size_t i, std::size_t j) const;

  std::string label(std::size_t i) const;

 private:
  std::optional<std::size_t> root_index(const Root& r) const;  // index in [0, 2P)
  Root root(std::size_t a) const;
  int norm(std::size_t a) const;

  RootSystemInfo roots_;
  std::vector<int> special_;  // P x P table of N for positive pairs (0 when not a root)
  std::vector<std::vector<int>> coroots_;
};

}  // namespace lieidx
