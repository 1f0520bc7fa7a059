#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cotan/canonical.hpp"
#include "cotan/complex.hpp"
#include "cotan/cotangent.hpp"

namespace cotan {

inline long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

namespace detail {

// Exchange axiom over an equicardinal family: for every pair and every
// x in B1 minus B2 some y in B2 minus B1 makes B1 - x + y a member.
inline bool basis_exchange_holds(const std::vector<VertexSet>& bases) {
    std::set<std::uint64_t> in;
    for (VertexSet b : bases) in.insert(b.bits());
    for (VertexSet b1 : bases)
        for (VertexSet b2 : bases) {
            if (b1 == b2) continue;
            for (int x : b1.minus(b2)) {
                bool found = false;
                for (int y : b2.minus(b1))
                    if (in.count(b1.without(x).with(y).bits())) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
        }
    return true;
}

}  // namespace detail

class Matroid {
public:
    static Matroid from_bases(int n, std::vector<VertexSet> bases) {
        if (n < 0 || n > 63) throw std::invalid_argument("ground set size out of range");
        if (bases.empty()) throw std::invalid_argument("a matroid needs at least one basis");
        std::sort(bases.begin(), bases.end(), SizeLexLess{});
        bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
        const VertexSet ground = VertexSet::full(n);
        for (VertexSet b : bases) {
            if (!b.subset_of(ground)) throw std::invalid_argument("basis outside the ground set");
            if (b.size() != bases.front().size())
                throw std::invalid_argument("bases must be equicardinal");
        }
        if (!detail::basis_exchange_holds(bases))
            throw std::invalid_argument("basis exchange fails");
        Matroid m;
        m.n_ = n;
        m.bases_ = std::move(bases);
        return m;
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<VertexSet>& bases() const { return bases_; }
    [[nodiscard]] int rank() const { return bases_.front().size(); }
    [[nodiscard]] int corank() const { return n_ - rank(); }

    [[nodiscard]] SimplicialComplex complex() const {
        return SimplicialComplex::from_facets(n_, bases_);
    }

    // Elements in no basis.
    [[nodiscard]] VertexSet loops() const {
        VertexSet u;
        for (VertexSet b : bases_) u = u.unite(b);
        return VertexSet::full(n_).minus(u);
    }

    // Elements in every basis.
    [[nodiscard]] VertexSet coloops() const {
        VertexSet u = bases_.front();
        for (VertexSet b : bases_) u = u.intersect(b);
        return u;
    }

    [[nodiscard]] std::vector<VertexSet> circuits() const { return complex().minimal_nonfaces(); }

    bool operator==(const Matroid&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> bases_;
};

inline bool is_matroid_complex(const SimplicialComplex& c) {
    if (c.is_void()) return false;
    const auto& facets = c.facets();
    for (VertexSet f : facets)
        if (f.size() != facets.front().size()) return false;
    return detail::basis_exchange_holds(facets);
}

inline Matroid uniform(int n, int r) {
    if (r < 0 || r > n) throw std::invalid_argument("uniform rank out of range");
    std::vector<VertexSet> bases;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (r == 0) return Matroid::from_bases(n, {VertexSet{}});
    while (true) {
        VertexSet b;
        for (int v : idx) b = b.with(v);
        bases.push_back(b);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return Matroid::from_bases(n, bases);
}

inline Matroid dual(const Matroid& m) {
    std::vector<VertexSet> co;
    const VertexSet ground = VertexSet::full(m.n());
    co.reserve(m.bases().size());
    for (VertexSet b : m.bases()) co.push_back(ground.minus(b));
    return Matroid::from_bases(m.n(), co);
}

// Loops plus the partition of the remaining elements into parallel classes:
// non-loops v, w fall together when {v, w} is dependent.
struct PartitionSpec {
    VertexSet loops;
    std::vector<VertexSet> parallel_classes;  // disjoint, nonempty, cover the non-loops
};

inline PartitionSpec parallel_classes(const Matroid& m) {
    PartitionSpec out;
    out.loops = m.loops();
    const SimplicialComplex c = m.complex();
    const VertexSet rest = VertexSet::full(m.n()).minus(out.loops);
    detail::UnionFind uf(m.n());
    for (int v : rest)
        for (int w : rest) {
            if (w <= v) continue;
            if (!c.is_face(VertexSet{{v, w}})) uf.unite(v, w);
        }
    std::map<int, VertexSet> cls;
    for (int v : rest) cls[uf.find(v)] = cls[uf.find(v)].with(v);
    for (auto& [root, vs] : cls) out.parallel_classes.push_back(vs);
    std::sort(out.parallel_classes.begin(), out.parallel_classes.end(), SizeLexLess{});
    return out;
}

// Rank-2 matroid with the given parallel structure: bases are the pairs
// meeting two distinct classes.
inline Matroid rank2_from_partition(const PartitionSpec& spec) {
    if (spec.parallel_classes.size() < 2)
        throw std::invalid_argument("rank two needs at least two parallel classes");
    VertexSet seen = spec.loops;
    int top = spec.loops.empty() ? -1 : spec.loops.max_element();
    for (VertexSet cls : spec.parallel_classes) {
        if (cls.empty() || cls.intersects(seen))
            throw std::invalid_argument("parallel classes must be nonempty and disjoint");
        seen = seen.unite(cls);
        top = std::max(top, cls.max_element());
    }
    const int n = top + 1;
    if (!VertexSet::full(n).minus(seen).empty())
        throw std::invalid_argument("classes and loops must cover the ground set");
    std::vector<VertexSet> bases;
    for (std::size_t i = 0; i < spec.parallel_classes.size(); ++i)
        for (std::size_t j = i + 1; j < spec.parallel_classes.size(); ++j)
            for (int v : spec.parallel_classes[i])
                for (int w : spec.parallel_classes[j]) bases.push_back(VertexSet{{v, w}});
    return Matroid::from_bases(n, bases);
}

// Isomorphism classes of coloop-free corank-2 matroids on [n]: duals of the
// rank-2 matroids given by partitions of [n] into at least two parallel
// classes. Classes are determined by the multiset of part sizes.
inline std::vector<Matroid> corank2_enumerate(int n) {
    if (n < 2 || n > 9) throw std::invalid_argument("corank-2 enumeration supports 2 <= n <= 9");
    std::vector<Matroid> out;
    std::vector<int> parts;
    auto emit = [&]() {
        if (parts.size() < 2) return;
        PartitionSpec spec;
        int next = 0;
        for (int p : parts) {
            VertexSet cls;
            for (int i = 0; i < p; ++i) cls = cls.with(next++);
            spec.parallel_classes.push_back(cls);
        }
        out.push_back(dual(rank2_from_partition(spec)));
    };
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Two elements are connected when some circuit contains both; components are
// the equivalence classes, with coloops as singletons.
inline std::vector<VertexSet> component_supports(const Matroid& m) {
    detail::UnionFind uf(m.n());
    for (VertexSet c : m.circuits()) {
        if (c.empty()) continue;
        const int head = c.min_element();
        for (int v : c) uf.unite(head, v);
    }
    std::map<int, VertexSet> comp;
    for (int v = 0; v < m.n(); ++v) comp[uf.find(v)] = comp[uf.find(v)].with(v);
    std::vector<VertexSet> out;
    for (auto& [root, vs] : comp) out.push_back(vs);
    std::sort(out.begin(), out.end(), SizeLexLess{});
    return out;
}

inline bool matroid_is_connected(const Matroid& m) { return component_supports(m).size() <= 1; }

// The restriction of M to a union of components has bases B ∩ S; each
// component is re-indexed onto a dense ground set in element order.
inline Matroid restrict_to(const Matroid& m, VertexSet s) {
    std::vector<int> dense(static_cast<std::size_t>(m.n()), -1);
    int k = 0;
    for (int v : s) dense[static_cast<std::size_t>(v)] = k++;
    std::set<std::uint64_t> seen;
    std::vector<VertexSet> bases;
    for (VertexSet b : m.bases()) {
        VertexSet r;
        for (int v : b.intersect(s)) r = r.with(dense[static_cast<std::size_t>(v)]);
        if (seen.insert(r.bits()).second) bases.push_back(r);
    }
    return Matroid::from_bases(k, bases);
}

inline std::vector<Matroid> connected_components(const Matroid& m) {
    std::vector<Matroid> out;
    for (VertexSet s : component_supports(m)) out.push_back(restrict_to(m, s));
    return out;
}

// b meets every circuit in nothing or all of itself.
inline bool is_cycle_atomic(const Matroid& m, VertexSet b) {
    for (VertexSet c : m.circuits()) {
        const VertexSet x = b.intersect(c);
        if (!x.empty() && !(x == b)) return false;
    }
    return true;
}

// All surviving second-module dimension of the uniform matroid complex at a
// given negative-support size: nonzero only at size two, where it is
// r*C(n-2,r) - C(n-2,r-1); that expression is already zero at r = n-2 and
// corank below two has no candidate circuits at all.
inline long long uniform_t2_formula(int n, int r, int bsize) {
    if (bsize != 2 || r > n - 2) return 0;
    return r * binom(n - 2, r) - binom(n - 2, r - 1);
}

// All r-subsets of [n] with the database's revlex order: S precedes T when
// the largest element where they differ lies in T.
inline std::vector<VertexSet> revlex_subsets(int n, int r) {
    std::vector<VertexSet> subs;
    for_each_subset(VertexSet::full(n), [&](VertexSet s) {
        if (static_cast<int>(s.size()) == r) subs.push_back(s);
    });
    std::sort(subs.begin(), subs.end(), [](VertexSet a, VertexSet b) { return a.revlex_less(b); });
    return subs;
}

struct MatroidParseError : std::runtime_error {
    explicit MatroidParseError(const std::string& what) : std::runtime_error(what) {}
};

// One database body line: position k (0-based, revlex order of r-subsets) is
// '*' exactly when that subset is a basis.
inline Matroid parse_revlex(const std::string& line, int n, int r) {
    const auto subs = revlex_subsets(n, r);
    if (line.size() != subs.size())
        throw MatroidParseError("expected " + std::to_string(subs.size()) + " characters for n=" +
                                std::to_string(n) + " r=" + std::to_string(r) + ", got " +
                                std::to_string(line.size()));
    std::vector<VertexSet> bases;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (ch == '*')
            bases.push_back(subs[i]);
        else if (ch != '0')
            throw MatroidParseError("invalid character '" + std::string(1, ch) + "' at position " +
                                    std::to_string(i));
    }
    if (bases.empty()) throw MatroidParseError("no basis marked");
    if (!detail::basis_exchange_holds(bases)) {
        // name the first basis that breaks exchange against some partner
        std::set<std::uint64_t> in;
        for (VertexSet b : bases) in.insert(b.bits());
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] != '*') continue;
            const VertexSet b1 = subs[i];
            for (VertexSet b2 : bases)
                for (int x : b1.minus(b2)) {
                    bool found = false;
                    for (int y : b2.minus(b1))
                        if (in.count(b1.without(x).with(y).bits())) found = true;
                    if (!found)
                        throw MatroidParseError("basis exchange fails for the basis at position " +
                                                std::to_string(i));
                }
        }
        throw MatroidParseError("basis exchange fails");
    }
    return Matroid::from_bases(n, std::move(bases));
}

// Streams `# n=<n> r=<r>` headers and revlex body lines; fn(line_number,
// matroid). Blank lines are skipped; errors carry the line number.
template <class Fn>
void for_each_db_matroid(std::istream& in, Fn&& fn) {
    std::string line;
    int line_no = 0;
    int n = -1, r = -1;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            int hn = -1, hr = -1;
            if (std::sscanf(line.c_str(), "# n=%d r=%d", &hn, &hr) != 2 || hn < 0 || hr < 0 ||
                hr > hn || hn > 63)
                throw MatroidParseError("line " + std::to_string(line_no) + ": bad header '" +
                                        line + "'");
            n = hn;
            r = hr;
            continue;
        }
        if (n < 0) throw MatroidParseError("line " + std::to_string(line_no) +
                                           ": body line before any '# n=.. r=..' header");
        try {
            fn(line_no, parse_revlex(line, n, r));
        } catch (const MatroidParseError& e) {
            throw MatroidParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

// Vanishing of the second module versus "join of small-corank pieces": the
// two sides of the open equivalence this tool scans for counterexamples to.
struct ConjectureVerdict {
    bool t2_zero = false;
    bool join_of_corank_le2 = false;

    [[nodiscard]] bool agree() const { return t2_zero == join_of_corank_le2; }
    // t2_zero without the structure is the interesting direction; the
    // converse failing would contradict a proved vanishing result.
    [[nodiscard]] bool counterexample() const { return t2_zero && !join_of_corank_le2; }
};

inline ConjectureVerdict conjecture_check(const Matroid& m, FieldChoice field) {
    if (m.n() > 9) throw std::invalid_argument("conjecture check supports n <= 9");
    ConjectureVerdict v;
    v.t2_zero = t2_vanishes(m.complex(), field);
    v.join_of_corank_le2 = true;
    for (const Matroid& c : connected_components(m))
        if (c.corank() > 2) v.join_of_corank_le2 = false;
    return v;
}

// Every matroid on a ground set of size n up to isomorphism, by brute force
// over basis families per rank with exchange filtering and canonical
// deduplication. Candidate families grow like 2^C(n,r), so this stops at
// n = 6; larger ground sets come from database files.
inline std::vector<Matroid> enumerate_all_matroids(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("exhaustive matroid enumeration supports n <= 6");
    std::vector<Matroid> out;
    for (int r = 0; r <= n; ++r) {
        const auto subs = revlex_subsets(n, r);
        const std::size_t count = subs.size();
        std::set<std::string> seen;
        for (std::uint64_t mask = 1; mask < (1ull << count); ++mask) {
            std::vector<VertexSet> bases;
            for (std::size_t i = 0; i < count; ++i)
                if (mask & (1ull << i)) bases.push_back(subs[i]);
            if (!detail::basis_exchange_holds(bases)) continue;
            Matroid m = Matroid::from_bases(n, bases);
            if (seen.insert(canonical_form(m.complex())).second) out.push_back(std::move(m));
        }
    }
    return out;
}

}  // namespace cotan
