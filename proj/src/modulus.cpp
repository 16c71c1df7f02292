#include "gts/modulus.hpp"

#include <algorithm>
#include <cmath>

#include "gts/errors.hpp"

namespace gts {

NodeSet::NodeSet(std::vector<Node> nodes, std::optional<std::pair<Scalar, Scalar>> interval)
    : dom_(nodes.empty() ? Domain::Float64 : nodes.front().x.domain()), nodes_(std::move(nodes)),
      interval_(std::move(interval)) {
    if (nodes_.empty()) throw Error("node set must contain at least one node");
    for (const auto& nd : nodes_) {
        if (nd.x.domain() != dom_) throw MixedDomainError("nodes span mixed domains");
        if (nd.multiplicity < 1) throw Error("node multiplicity must be >= 1");
        n_ += nd.multiplicity;
    }
    std::sort(nodes_.begin(), nodes_.end(),
              [](const Node& a, const Node& b) { return a.x < b.x; });

    if (dom_ == Domain::ExactRational) {
        for (std::size_t i = 1; i < nodes_.size(); ++i)
            if (nodes_[i].x == nodes_[i - 1].x)
                throw DuplicateNodeError("duplicate node " + nodes_[i].x.to_string());
    } else {
        double xmax = 0.0;
        for (const auto& nd : nodes_) xmax = std::max(xmax, std::fabs(nd.x.float64()));
        double gap = 1e-12 * (1.0 + xmax);
        for (std::size_t i = 1; i < nodes_.size(); ++i)
            if (std::fabs(nodes_[i].x.float64() - nodes_[i - 1].x.float64()) <= gap)
                throw DuplicateNodeError("nodes " + nodes_[i - 1].x.to_string() + " and " +
                                         nodes_[i].x.to_string() +
                                         " are closer than the distinctness tolerance");
    }

    if (interval_) {
        if (interval_->first.domain() != dom_ || interval_->second.domain() != dom_)
            throw MixedDomainError("interval endpoints in a different domain than the nodes");
        if (!(interval_->first < interval_->second))
            throw DomainError("interval must satisfy a < b");
        for (const auto& nd : nodes_)
            if (nd.x < interval_->first || interval_->second < nd.x)
                throw DomainError("node " + nd.x.to_string() + " outside interval [" +
                                  interval_->first.to_string() + ", " +
                                  interval_->second.to_string() + "]");
    }
}

NodeSet NodeSet::parse(std::string_view text, Domain d,
                       std::optional<std::pair<Scalar, Scalar>> interval) {
    std::vector<Node> nodes;
    std::size_t pos = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        item = trim(item);
        if (item.empty()) throw SyntaxError(pos, "node", "empty node item in node list");
        std::size_t colon = item.rfind(':');
        if (colon == std::string_view::npos)
            throw SyntaxError(pos, ":", "node item '" + std::string(item) + "' is missing ':m'");
        auto xs = Scalar::parse(d, trim(item.substr(0, colon)));
        if (!xs)
            throw SyntaxError(pos, "number",
                              "invalid node value '" + std::string(item.substr(0, colon)) + "'");
        auto ms = Rational::parse(trim(item.substr(colon + 1)));
        std::optional<long> m = ms ? ms->to_long() : std::nullopt;
        if (!m || *m < 1 || *m > 1000)
            throw SyntaxError(pos, "positive integer",
                              "invalid multiplicity '" + std::string(item.substr(colon + 1)) + "'");
        nodes.push_back(Node{*xs, static_cast<int>(*m)});
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return NodeSet(std::move(nodes), std::move(interval));
}

std::string NodeSet::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (i) out += ",";
        out += nodes_[i].x.to_string() + ":" + std::to_string(nodes_[i].multiplicity);
    }
    return out;
}

Polynomial build_modulus(const NodeSet& ns) {
    Domain d = ns.domain();
    Polynomial h = Polynomial::constant(Scalar::one(d));
    for (const auto& nd : ns.nodes()) {
        Polynomial factor(d, {-nd.x, Scalar::one(d)});
        for (int k = 0; k < nd.multiplicity; ++k) h = h * factor;
    }
    return h;
}

int sigma(int u, int v) { return u < v ? 1 : 0; }

std::vector<int> zero_count_table(const NodeSet& ns) {
    const int n = ns.n();
    std::vector<int> table(static_cast<std::size_t>(n), 0);
    int acc = 0;  // sum_i sum_{j=0..k} sigma(j, m_i)
    for (int k = 0; k < n; ++k) {
        for (const auto& nd : ns.nodes()) acc += sigma(k, nd.multiplicity);
        table[static_cast<std::size_t>(k)] = acc - k;
    }
    return table;
}

int verify_rolle_numeric(const NodeSet& ns, int k) {
    if (ns.domain() != Domain::Float64)
        throw MixedDomainError("verify_rolle_numeric requires the Float64 domain");
    if (k < 0 || k >= ns.n()) throw Error("derivative order out of range");

    Polynomial hk = derivative(build_modulus(ns), k);

    std::vector<double> exact_roots;
    for (const auto& nd : ns.nodes())
        if (nd.multiplicity > k) exact_roots.push_back(nd.x.float64());

    double lo = ns.node(0).x.float64();
    double hi = ns.node(ns.r() - 1).x.float64();
    if (!(lo < hi)) return static_cast<int>(exact_roots.size());

    constexpr int kGrid = 4096;
    const double eps = 1e-12 * (hi - lo);
    auto contains_exact_root = [&](double a, double b) {
        for (double r : exact_roots)
            if (r >= a - eps && r <= b + eps) return true;
        return false;
    };

    // sign changes away from the known roots; zeros in the sample sequence
    // are compressed out
    int crossings = 0;
    int prev_sign = 0;
    double prev_t = lo;
    for (int i = 0; i < kGrid; ++i) {
        double t = lo + (hi - lo) * i / (kGrid - 1);
        double v = eval(hk, Scalar(t)).float64();
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (prev_sign != 0 && s != prev_sign && !contains_exact_root(prev_t, t)) ++crossings;
        prev_sign = s;
        prev_t = t;
    }
    return crossings + static_cast<int>(exact_roots.size());
}

}  // namespace gts
