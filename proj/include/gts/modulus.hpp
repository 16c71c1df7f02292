#ifndef GTS_MODULUS_HPP
#define GTS_MODULUS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gts/poly.hpp"

namespace gts {

struct Node {
    Scalar x;
    int multiplicity;
};

/// Distinct interpolation nodes with multiplicities, normalized ascending.
/// Float64 nodes must be separated by more than 1e-12*(1+max|x|).
class NodeSet {
  public:
    NodeSet(std::vector<Node> nodes,
            std::optional<std::pair<Scalar, Scalar>> interval = std::nullopt);

    /// Comma-separated "x:m" items, x as decimal or "p/q".
    static NodeSet parse(std::string_view text, Domain d,
                         std::optional<std::pair<Scalar, Scalar>> interval = std::nullopt);

    Domain domain() const { return dom_; }
    int r() const { return static_cast<int>(nodes_.size()); }
    int n() const { return n_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    const std::optional<std::pair<Scalar, Scalar>>& interval() const { return interval_; }

    /// Canonical node-list text.
    std::string to_text() const;

  private:
    Domain dom_;
    std::vector<Node> nodes_;
    std::optional<std::pair<Scalar, Scalar>> interval_;
    int n_ = 0;
};

/// h(x) = prod (x - x_i)^{m_i}, monic of degree n.
Polynomial build_modulus(const NodeSet& ns);

/// 1 if u < v else 0.
int sigma(int u, int v);

/// Entry k (0 <= k <= n-1) is the guaranteed count of distinct zeros of
/// h^(k):  sum_i sum_{j=0..k} sigma(j, m_i) - k.  The last entry is 1.
std::vector<int> zero_count_table(const NodeSet& ns);

/// Counts distinct real zeros of h^(k) numerically: sign changes on a
/// 4096-point grid over [min x_i, max x_i], plus the exact roots given by
/// nodes with m_i > k. Float64 only. Result >= zero_count_table(ns)[k].
int verify_rolle_numeric(const NodeSet& ns, int k);

}  // namespace gts

#endif
