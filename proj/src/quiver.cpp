#include "friezelab/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "friezelab/errors.hpp"

namespace friezelab {

Quiver::Quiver(int n) {
    if (n < 0) throw InvalidInput("quiver size must be nonnegative");
    b_ = ExchangeMatrix::Zero(n, n);
}

Quiver::Quiver(ExchangeMatrix b) : b_(std::move(b)) {
    if (b_.rows() != b_.cols()) throw InvalidInput("exchange matrix must be square");
    if (b_ != -b_.transpose()) throw InvalidInput("exchange matrix must be skew-symmetric");
}

Quiver Quiver::from_arrows(int n, const std::vector<Arrow>& arrows) {
    Quiver q(n);
    for (const auto& a : arrows) {
        if (a.tail < 1 || a.tail > n || a.head < 1 || a.head > n) {
            throw InvalidInput("arrow endpoint out of range");
        }
        if (a.tail == a.head) throw InvalidInput("loops are not allowed in a cluster quiver");
        if (a.multiplicity < 0) throw InvalidInput("arrow multiplicity must be nonnegative");
        if (q.b_(a.head - 1, a.tail - 1) > 0) {
            throw InvalidInput("2-cycles are not allowed in a cluster quiver");
        }
        q.b_(a.tail - 1, a.head - 1) += a.multiplicity;
        q.b_(a.head - 1, a.tail - 1) -= a.multiplicity;
    }
    return q;
}

std::vector<Arrow> Quiver::arrow_list() const {
    std::vector<Arrow> out;
    for (int i = 0; i < size(); ++i) {
        for (int j = 0; j < size(); ++j) {
            if (b_(i, j) > 0) out.push_back({i + 1, j + 1, b_(i, j)});
        }
    }
    return out;
}

int Quiver::max_multiplicity() const {
    return size() == 0 ? 0 : b_.cwiseAbs().maxCoeff();
}

Quiver Quiver::mutate(int k) const {
    const int n = size();
    if (k < 1 || k > n) throw InvalidInput("mutation vertex out of range");
    const int c = k - 1;

    // Arrow-count bookkeeping: count(i,j) = number of arrows i -> j.
    Eigen::MatrixXi count = b_.cwiseMax(0);

    // (1) compose every length-2 path i -> k -> j into a new arrow i -> j.
    Eigen::MatrixXi added = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != c && j != c) added(i, j) = count(i, c) * count(c, j);
        }
    }
    count += added;

    // (2) reverse the arrows incident with k.
    for (int j = 0; j < n; ++j) {
        if (j == c) continue;
        std::swap(count(c, j), count(j, c));
    }

    // (3) cancel 2-cycles.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int both = std::min(count(i, j), count(j, i));
            count(i, j) -= both;
            count(j, i) -= both;
        }
    }
    Quiver out;
    out.b_ = count - count.transpose();
    return out;
}

Quiver Quiver::relabel(const Permutation& perm) const {
    const int n = size();
    if (static_cast<int>(perm.size()) != n) throw InvalidInput("permutation has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) throw InvalidInput("not a permutation");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    Quiver out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.b_(perm[i] - 1, perm[j] - 1) = b_(i, j);
    }
    return out;
}

namespace {

// Branch and bound over vertex orders. Position p contributes the column
// segment b(order[0],order[p]) .. b(order[p-1],order[p]); the goal is the
// lexicographically greatest concatenation.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const ExchangeMatrix& b) : b_(b), n_(static_cast<int>(b.rows())) {
        twin_.assign(static_cast<std::size_t>(n_), -1);
        for (int v = 0; v < n_; ++v) {
            for (int u = 0; u < v; ++u) {
                if (twin_[static_cast<std::size_t>(u)] == -1 && are_twins(u, v)) {
                    twin_[static_cast<std::size_t>(v)] = u;
                    break;
                }
            }
        }
        used_.assign(static_cast<std::size_t>(n_), false);
    }

    std::vector<int> run() {
        order_.clear();
        current_.clear();
        search();
        return best_order_;
    }

private:
    bool are_twins(int u, int v) const {
        if (b_(u, v) != 0) return false;
        for (int w = 0; w < n_; ++w) {
            if (w != u && w != v && b_(u, w) != b_(v, w)) return false;
        }
        return true;
    }

    // Representative of v's twin class (twin_ points at the smallest member).
    int twin_root(int v) const {
        while (twin_[static_cast<std::size_t>(v)] != -1) v = twin_[static_cast<std::size_t>(v)];
        return v;
    }

    // Lexicographic comparison of the current prefix with the same-length prefix of best_.
    int compare_with_best() const {
        for (std::size_t i = 0; i < current_.size(); ++i) {
            if (current_[i] != best_[i]) return current_[i] < best_[i] ? -1 : 1;
        }
        return 0;
    }

    void search() {
        const int p = static_cast<int>(order_.size());
        if (p == n_) {
            if (!have_best_ || compare_with_best() > 0) {
                best_ = current_;
                best_order_ = order_;
                have_best_ = true;
            }
            return;
        }
        std::vector<int> tried_roots;
        for (int v = 0; v < n_; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            const int root = twin_root(v);
            if (std::find(tried_roots.begin(), tried_roots.end(), root) != tried_roots.end()) continue;
            tried_roots.push_back(root);

            const std::size_t offset = current_.size();
            for (int i = 0; i < p; ++i) current_.push_back(b_(order_[static_cast<std::size_t>(i)], v));
            if (!have_best_ || compare_with_best() >= 0) {
                used_[static_cast<std::size_t>(v)] = true;
                order_.push_back(v);
                search();
                order_.pop_back();
                used_[static_cast<std::size_t>(v)] = false;
            }
            current_.resize(offset);
        }
    }

    const ExchangeMatrix& b_;
    int n_;
    std::vector<int> twin_;
    std::vector<bool> used_;
    std::vector<int> order_;
    std::vector<int> current_;
    std::vector<int> best_;
    std::vector<int> best_order_;
    bool have_best_ = false;
};

std::vector<int> flatten(const ExchangeMatrix& b) {
    return std::vector<int>(b.data(), b.data() + b.size());
}

}  // namespace

CanonicalForm canonical_form(const Quiver& q, int limit) {
    const int n = q.size();
    if (n > limit) {
        std::ostringstream os;
        os << "canonical_form supports at most " << limit << " vertices, got " << n;
        throw LimitExceeded(os.str());
    }
    const std::vector<int> order = CanonicalSearch(q.matrix()).run();
    Permutation perm(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) perm[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos + 1;
    return {q.relabel(perm), perm};
}

std::vector<std::pair<int, int>> dynkin_edges(DynkinFamily family, int rank) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case DynkinFamily::A:
            if (rank < 1) throw InvalidInput("type A needs rank >= 1");
            for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
            break;
        case DynkinFamily::D:
            if (rank < 4) throw InvalidInput("type D needs rank >= 4");
            for (int i = 1; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(2, rank);
            break;
        case DynkinFamily::E:
            if (rank < 6 || rank > 8) throw InvalidInput("type E needs rank 6, 7 or 8");
            for (int i = 1; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(3, rank);
            break;
    }
    return edges;
}

Quiver dynkin(DynkinFamily family, int rank, const std::vector<Orientation>& orientation) {
    const auto edges = dynkin_edges(family, rank);
    if (orientation.size() > edges.size()) throw InvalidInput("orientation has more entries than edges");
    std::vector<Arrow> arrows;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const bool forward = e >= orientation.size() || orientation[e] == Orientation::Forward;
        const auto [a, b] = edges[e];
        arrows.push_back(forward ? Arrow{a, b, 1} : Arrow{b, a, 1});
    }
    return Quiver::from_arrows(rank, arrows);
}

std::pair<DynkinFamily, int> parse_dynkin_type(const std::string& label) {
    if (label.size() < 2) throw InvalidInput("bad Dynkin type '" + label + "'");
    DynkinFamily family;
    switch (label[0]) {
        case 'A': case 'a': family = DynkinFamily::A; break;
        case 'D': case 'd': family = DynkinFamily::D; break;
        case 'E': case 'e': family = DynkinFamily::E; break;
        default: throw InvalidInput("bad Dynkin family in '" + label + "'");
    }
    int rank = 0;
    try {
        std::size_t used = 0;
        rank = std::stoi(label.substr(1), &used);
        if (used != label.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw InvalidInput("bad Dynkin rank in '" + label + "'");
    }
    dynkin_edges(family, rank);  // validates the rank
    return {family, rank};
}

std::optional<std::string> dynkin_type_of(const Quiver& q) {
    const int n = q.size();
    if (n == 0 || q.max_multiplicity() > 1) return std::nullopt;
    const ExchangeMatrix& b = q.matrix();

    std::vector<int> component(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<char, int>> types;
    for (int start = 0; start < n; ++start) {
        if (component[static_cast<std::size_t>(start)] != -1) continue;
        std::vector<int> members{start};
        component[static_cast<std::size_t>(start)] = start;
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
            for (int w = 0; w < n; ++w) {
                if (b(members[idx], w) != 0 && component[static_cast<std::size_t>(w)] == -1) {
                    component[static_cast<std::size_t>(w)] = start;
                    members.push_back(w);
                }
            }
        }
        int edges = 0;
        std::vector<int> degree;
        for (int v : members) {
            int d = 0;
            for (int w = 0; w < n; ++w) d += b(v, w) != 0 ? 1 : 0;
            degree.push_back(d);
            edges += d;
        }
        edges /= 2;
        const int size = static_cast<int>(members.size());
        if (edges != size - 1) return std::nullopt;

        const int max_degree = *std::max_element(degree.begin(), degree.end());
        if (max_degree <= 2) {
            types.emplace_back('A', size);
            continue;
        }
        if (max_degree > 3 || std::count(degree.begin(), degree.end(), 3) != 1) return std::nullopt;

        // Arm lengths from the unique branch vertex.
        const int branch = members[static_cast<std::size_t>(std::find(degree.begin(), degree.end(), 3) - degree.begin())];
        std::vector<int> arms;
        for (int first = 0; first < n; ++first) {
            if (b(branch, first) == 0) continue;
            int prev = branch, cur = first, length = 1;
            for (;;) {
                int next = -1;
                for (int w = 0; w < n; ++w) {
                    if (w != prev && b(cur, w) != 0) next = w;
                }
                if (next == -1) break;
                prev = cur;
                cur = next;
                ++length;
            }
            arms.push_back(length);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) {
            types.emplace_back('D', size);
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
            types.emplace_back('E', size);
        } else {
            return std::nullopt;
        }
    }
    std::sort(types.begin(), types.end());
    std::string out;
    for (const auto& [family, rank] : types) {
        if (!out.empty()) out += '+';
        out += family + std::to_string(rank);
    }
    return out;
}

FiniteTypeResult is_finite_type(const Quiver& q) {
    FiniteTypeResult result;
    if (q.max_multiplicity() >= 2) {
        result.witness = q;
        return result;
    }

    struct Node {
        Quiver quiver;
        std::size_t parent;
        int via;
    };
    std::vector<Node> nodes{{q, 0, 0}};
    std::map<std::vector<int>, std::size_t> seen{{flatten(canonical_form(q).quiver.matrix()), 0}};

    auto path_to = [&](std::size_t idx) {
        std::vector<int> path;
        while (idx != 0) {
            path.push_back(nodes[idx].via);
            idx = nodes[idx].parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
        for (int k = 1; k <= q.size(); ++k) {
            Quiver next = nodes[idx].quiver.mutate(k);
            if (next.max_multiplicity() >= 2) {
                result.path = path_to(idx);
                result.path.push_back(k);
                result.witness = std::move(next);
                result.classes_visited = nodes.size();
                return result;
            }
            auto key = flatten(canonical_form(next).quiver.matrix());
            if (seen.emplace(std::move(key), nodes.size()).second) {
                nodes.push_back({std::move(next), idx, k});
            }
        }
    }

    result.classes_visited = nodes.size();
    for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
        if (auto type = dynkin_type_of(nodes[idx].quiver)) {
            result.finite = true;
            result.type = *type;
            result.path = path_to(idx);
            result.witness = nodes[idx].quiver;
            return result;
        }
    }
    // Closed class with simple arrows only but no Dynkin member; not expected.
    result.witness = q;
    return result;
}

std::pair<std::vector<int>, std::vector<int>> sinks_sources(const Quiver& q) {
    std::vector<int> sinks, sources;
    const ExchangeMatrix& b = q.matrix();
    for (int i = 0; i < q.size(); ++i) {
        if ((b.row(i).array() <= 0).all()) sinks.push_back(i + 1);
        if ((b.row(i).array() >= 0).all()) sources.push_back(i + 1);
    }
    return {sinks, sources};
}

bool is_acyclic(const Quiver& q) {
    const int n = q.size();
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) indegree[static_cast<std::size_t>(j)] += q.matrix()(i, j) > 0 ? 1 : 0;
    }
    std::vector<int> ready;
    for (int v = 0; v < n; ++v) {
        if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    }
    int removed = 0;
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        ++removed;
        for (int j = 0; j < n; ++j) {
            if (q.matrix()(v, j) > 0 && --indegree[static_cast<std::size_t>(j)] == 0) ready.push_back(j);
        }
    }
    return removed == n;
}

}  // namespace friezelab
