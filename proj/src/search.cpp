#include "tripex/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "tripex/structure.hpp"
#include "tripex/trees.hpp"

namespace tripex {

std::string to_string(EmbeddingKind k) { return k == EmbeddingKind::Expansion ? "expansion" : "subhypergraph"; }

namespace {

long long choose2(long long m) { return m < 2 ? 0 : m * (m - 1) / 2; }

// Mutable host triple system with O(1) triple and pair queries.
class Host {
public:
    explicit Host(int n)
        : n_(n), dense_(n <= 96), codeg_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
          degree_(static_cast<std::size_t>(n), 0) {
        if (dense_) tri_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    }

    explicit Host(const TripleSystem& h) : Host(h.order()) {
        for (const Triple& t : h.edges()) add(t);
    }

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] bool adjacent(Vertex x, Vertex y) const { return codeg_[pair_key(x, y)] > 0; }

    [[nodiscard]] bool has(Vertex x, Vertex y, Vertex z) const {
        std::array<Vertex, 3> v{x, y, z};
        std::sort(v.begin(), v.end());
        const std::uint64_t k = key(v[0], v[1], v[2]);
        return dense_ ? tri_[k] != 0 : sparse_.contains(k);
    }

    void add(const Triple& t) { update(t, 1); }
    void remove(const Triple& t) { update(t, -1); }

private:
    [[nodiscard]] std::uint64_t key(Vertex a, Vertex b, Vertex c) const {
        const auto n = static_cast<std::uint64_t>(n_);
        return (static_cast<std::uint64_t>(a) * n + static_cast<std::uint64_t>(b)) * n + static_cast<std::uint64_t>(c);
    }
    [[nodiscard]] std::size_t pair_key(Vertex x, Vertex y) const {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y);
    }

    void update(const Triple& t, int delta) {
        const std::uint64_t k = key(t.a, t.b, t.c);
        if (dense_) {
            tri_[k] = delta > 0 ? 1 : 0;
        } else if (delta > 0) {
            sparse_.insert(k);
        } else {
            sparse_.erase(k);
        }
        for (const Edge& p : t.pairs()) {
            codeg_[pair_key(p.u, p.v)] += delta;
            codeg_[pair_key(p.v, p.u)] += delta;
        }
        for (Vertex v : {t.a, t.b, t.c}) degree_[static_cast<std::size_t>(v)] += delta;
    }

    int n_;
    bool dense_;
    std::vector<char> tri_;
    std::unordered_set<std::uint64_t> sparse_;
    std::vector<int> codeg_;
    std::vector<int> degree_;
};

// The forbidden triple system, preprocessed once.
struct Pattern {
    explicit Pattern(const TripleSystem& f) : triples(f.edges()), degree(static_cast<std::size_t>(f.order()), 0) {
        for (const Triple& t : triples)
            for (Vertex v : {t.a, t.b, t.c}) {
                if (degree[static_cast<std::size_t>(v)]++ == 0) support.push_back(v);
            }
        std::sort(support.begin(), support.end());
    }

    std::vector<Triple> triples;
    std::vector<int> degree;
    std::vector<Vertex> support;
};

// Backtracking for an injective map sending every pattern triple to a host triple.
class Embedder {
public:
    Embedder(const Host& host, const Pattern& pattern) : host_(host), p_(pattern) {}

    // `fixed` pins some pattern vertices; they must be distinct host vertices.
    std::optional<std::vector<Vertex>> find(const std::vector<std::pair<Vertex, Vertex>>& fixed = {}) {
        image_.assign(p_.degree.size(), -1);
        used_.assign(static_cast<std::size_t>(host_.order()), 0);
        if (static_cast<int>(p_.support.size()) > host_.order()) return std::nullopt;
        for (auto [v, w] : fixed) {
            if (p_.degree[static_cast<std::size_t>(v)] < 1 || host_.degree(w) < p_.degree[static_cast<std::size_t>(v)])
                return std::nullopt;
            image_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = 1;
        }
        plan(fixed);
        for (std::size_t i = 0; i < fixed.size(); ++i)
            if (!consistent(i)) return std::nullopt;
        if (!extend(fixed.size())) return std::nullopt;
        return image_;
    }

private:
    // Order the vertices: pinned ones first, then greedily the vertex sharing
    // the most triples with those already placed (ties: degree, then label).
    void plan(const std::vector<std::pair<Vertex, Vertex>>& fixed) {
        order_.clear();
        std::vector<char> placed(p_.degree.size(), 0);
        for (auto [v, w] : fixed) {
            order_.push_back(v);
            placed[static_cast<std::size_t>(v)] = 1;
        }
        while (order_.size() < p_.support.size()) {
            Vertex best = -1;
            std::pair<int, int> best_key{-1, -1};
            for (Vertex v : p_.support) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int touching = 0;
                for (const Triple& t : p_.triples)
                    if (t.contains(v) && (placed[static_cast<std::size_t>(t.a)] || placed[static_cast<std::size_t>(t.b)] ||
                                          placed[static_cast<std::size_t>(t.c)]))
                        ++touching;
                const std::pair<int, int> k{touching, p_.degree[static_cast<std::size_t>(v)]};
                if (k > best_key) {
                    best_key = k;
                    best = v;
                }
            }
            order_.push_back(best);
            placed[static_cast<std::size_t>(best)] = 1;
        }

        // Per position: triples completed there, and earlier vertices sharing a triple.
        std::vector<std::size_t> pos(p_.degree.size(), 0);
        for (std::size_t i = 0; i < order_.size(); ++i) pos[static_cast<std::size_t>(order_[i])] = i;
        closing_.assign(order_.size(), {});
        partners_.assign(order_.size(), {});
        for (const Triple& t : p_.triples) {
            const std::size_t last = std::max({pos[static_cast<std::size_t>(t.a)], pos[static_cast<std::size_t>(t.b)],
                                               pos[static_cast<std::size_t>(t.c)]});
            closing_[last].push_back(t);
            for (Vertex v : {t.a, t.b, t.c})
                for (Vertex u : {t.a, t.b, t.c})
                    if (pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)])
                        partners_[pos[static_cast<std::size_t>(v)]].push_back(u);
        }
        for (auto& p : partners_) {
            std::sort(p.begin(), p.end());
            p.erase(std::unique(p.begin(), p.end()), p.end());
        }
    }

    [[nodiscard]] bool consistent(std::size_t i) const {
        const Vertex w = image_[static_cast<std::size_t>(order_[i])];
        for (Vertex u : partners_[i])
            if (!host_.adjacent(image_[static_cast<std::size_t>(u)], w)) return false;
        for (const Triple& t : closing_[i])
            if (!host_.has(image_[static_cast<std::size_t>(t.a)], image_[static_cast<std::size_t>(t.b)],
                           image_[static_cast<std::size_t>(t.c)]))
                return false;
        return true;
    }

    bool extend(std::size_t i) {
        if (i == order_.size()) return true;
        const Vertex v = order_[i];
        const int need = p_.degree[static_cast<std::size_t>(v)];
        for (Vertex w = 0; w < host_.order(); ++w) {
            if (used_[static_cast<std::size_t>(w)] || host_.degree(w) < need) continue;
            image_[static_cast<std::size_t>(v)] = w;
            if (consistent(i)) {
                used_[static_cast<std::size_t>(w)] = 1;
                if (extend(i + 1)) return true;
                used_[static_cast<std::size_t>(w)] = 0;
            }
        }
        image_[static_cast<std::size_t>(v)] = -1;
        return false;
    }

    const Host& host_;
    const Pattern& p_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Triple>> closing_;
    std::vector<std::vector<Vertex>> partners_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
};

// A copy of the pattern through host triple d (which must be in the host).
bool copy_through(const Host& host, const Pattern& p, const Triple& d) {
    Embedder emb(host, p);
    std::array<Vertex, 3> target{d.a, d.b, d.c};
    for (const Triple& t : p.triples) {
        std::array<Vertex, 3> src{t.a, t.b, t.c};
        do {
            if (emb.find({{src[0], target[0]}, {src[1], target[1]}, {src[2], target[2]}})) return true;
        } while (std::next_permutation(src.begin(), src.end()));
    }
    return false;
}

EmbeddingCertificate certificate_from(const std::vector<Vertex>& image, EmbeddingKind kind) {
    EmbeddingCertificate cert;
    cert.kind = kind;
    for (std::size_t v = 0; v < image.size(); ++v)
        if (image[v] >= 0) cert.map.emplace_back(static_cast<Vertex>(v), image[v]);
    return cert;
}

}  // namespace

bool verify_embedding(const TripleSystem& h, const TripleSystem& f, const EmbeddingCertificate& cert) {
    std::map<Vertex, Vertex> map;
    std::unordered_set<Vertex> targets;
    for (auto [from, to] : cert.map) {
        if (from < 0 || from >= f.order() || to < 0 || to >= h.order()) return false;
        if (!map.emplace(from, to).second || !targets.insert(to).second) return false;
    }
    for (const Triple& t : f.edges()) {
        std::array<Vertex, 3> img{};
        std::size_t i = 0;
        for (Vertex v : {t.a, t.b, t.c}) {
            auto it = map.find(v);
            if (it == map.end()) return false;
            img[i++] = it->second;
        }
        std::sort(img.begin(), img.end());
        if (!h.has_edge(Triple{img[0], img[1], img[2]})) return false;
    }
    return true;
}

std::optional<EmbeddingCertificate> contains(const TripleSystem& h, const TripleSystem& f) {
    const Host host(h);
    const Pattern pattern(f);
    auto image = Embedder(host, pattern).find();
    if (!image) return std::nullopt;
    auto cert = certificate_from(*image, EmbeddingKind::Subhypergraph);
    if (!verify_embedding(h, f, cert)) throw std::logic_error("embedding certificate failed verification");
    return cert;
}

namespace {

// Embeds g into shadow(h) and then assigns distinct third vertices to its edges.
class ExpansionEmbedder {
public:
    ExpansionEmbedder(const TripleSystem& h, const Graph& g) : h_(h), host_(h), g_(g) {
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) > 0) active_.push_back(v);
        // Highest degree first, then vertices with the most placed neighbours.
        std::vector<char> placed(static_cast<std::size_t>(g.order()), 0);
        while (order_.size() < active_.size()) {
            Vertex best = -1;
            std::pair<int, int> best_key{-1, -1};
            for (Vertex v : active_) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int touching = 0;
                for (Vertex u : g.neighbors(v)) touching += placed[static_cast<std::size_t>(u)];
                const std::pair<int, int> k{touching, g.degree(v)};
                if (k > best_key) {
                    best_key = k;
                    best = v;
                }
            }
            order_.push_back(best);
            placed[static_cast<std::size_t>(best)] = 1;
        }
    }

    std::optional<EmbeddingCertificate> run() {
        if (active_.empty()) return EmbeddingCertificate{{}, EmbeddingKind::Expansion};
        if (active_.size() + g_.size() > static_cast<std::size_t>(h_.order())) return std::nullopt;
        image_.assign(static_cast<std::size_t>(g_.order()), -1);
        used_.assign(static_cast<std::size_t>(h_.order()), 0);
        if (!extend(0)) return std::nullopt;
        std::vector<Vertex> full(static_cast<std::size_t>(g_.order()) + g_.size(), -1);
        std::copy(image_.begin(), image_.end(), full.begin());
        for (std::size_t e = 0; e < g_.size(); ++e) full[static_cast<std::size_t>(g_.order()) + e] = third_[e];
        return certificate_from(full, EmbeddingKind::Expansion);
    }

private:
    bool extend(std::size_t i) {
        if (i == order_.size()) return match();
        const Vertex v = order_[i];
        for (Vertex w = 0; w < h_.order(); ++w) {
            if (used_[static_cast<std::size_t>(w)] || host_.degree(w) < g_.degree(v)) continue;
            bool ok = true;
            for (Vertex u : g_.neighbors(v)) {
                const Vertex iu = image_[static_cast<std::size_t>(u)];
                if (iu >= 0 && !host_.adjacent(iu, w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = 1;
            if (extend(i + 1)) return true;
            used_[static_cast<std::size_t>(w)] = 0;
            image_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    // Bipartite matching of edges to third vertices outside the image.
    bool match() {
        const auto& edges = g_.edges();
        options_.assign(edges.size(), {});
        for (std::size_t e = 0; e < edges.size(); ++e) {
            for (Vertex z : h_.third_vertices(image_[static_cast<std::size_t>(edges[e].u)],
                                              image_[static_cast<std::size_t>(edges[e].v)]))
                if (!used_[static_cast<std::size_t>(z)]) options_[e].push_back(z);
            if (options_[e].empty()) return false;
        }
        owner_.assign(static_cast<std::size_t>(h_.order()), -1);
        third_.assign(edges.size(), -1);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            seen_.assign(static_cast<std::size_t>(h_.order()), 0);
            if (!augment(e)) return false;
        }
        return true;
    }

    bool augment(std::size_t e) {
        for (Vertex z : options_[e]) {
            if (seen_[static_cast<std::size_t>(z)]) continue;
            seen_[static_cast<std::size_t>(z)] = 1;
            const int prev = owner_[static_cast<std::size_t>(z)];
            if (prev < 0 || augment(static_cast<std::size_t>(prev))) {
                owner_[static_cast<std::size_t>(z)] = static_cast<int>(e);
                third_[e] = z;
                return true;
            }
        }
        return false;
    }

    const TripleSystem& h_;
    Host host_;
    const Graph& g_;
    std::vector<Vertex> active_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
    std::vector<std::vector<Vertex>> options_;
    std::vector<int> owner_;
    std::vector<char> seen_;
    std::vector<Vertex> third_;
};

}  // namespace

std::optional<EmbeddingCertificate> contains_expansion(const TripleSystem& h, const Graph& g) {
    auto cert = ExpansionEmbedder(h, g).run();
    if (cert && !verify_embedding(h, expand(g).triples, *cert))
        throw std::logic_error("expansion certificate failed verification");
    return cert;
}

TripleSystem lower_bound_construction(int n, int c) {
    if (n < 0 || c < 0 || c > n) throw InvalidInput("construction needs 0 <= c <= n");
    std::vector<Triple> edges;
    for (Vertex core = 0; core < c; ++core)
        for (Vertex x = c; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y) edges.push_back(Triple{core, x, y});
    TripleSystem out(n, std::move(edges));
    if (static_cast<long long>(out.size()) != c * choose2(n - c))
        throw std::logic_error("construction has the wrong number of edges");
    return out;
}

TripleSystem star_construction(int n) {
    if (n < 1) throw InvalidInput("star construction needs n >= 1");
    std::vector<Triple> edges;
    for (Vertex x = 1; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) edges.push_back(Triple{0, x, y});
    return TripleSystem(n, std::move(edges));
}

namespace {

class TuranSearch {
public:
    TuranSearch(int n, const TripleSystem& f, const Budget& budget)
        : n_(n), pattern_(f), budget_(budget), start_(std::chrono::steady_clock::now()) {
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c) triples_.push_back(Triple{a, b, c});
        Host probe(n);
        for (std::size_t i = 0; i < triples_.size(); ++i) {
            probe.add(triples_[i]);
            if (!copy_through(probe, pattern_, triples_[i])) roots_.push_back(i);
            probe.remove(triples_[i]);
        }
    }

    struct Sub {
        int value = 0;
        std::vector<std::size_t> witness;
    };

    TuranResult run(const TripleSystem& f, int workers) {
        std::vector<Sub> subs(roots_.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            Host host(n_);
            for (;;) {
                const std::size_t j = next.fetch_add(1);
                if (j >= roots_.size() || stop_.load()) return;
                subs[j] = subtree(host, j);
            }
        };
        const int threads = std::max(1, std::min<int>(workers, static_cast<int>(roots_.size())));
        if (threads == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }

        Sub best;
        for (const Sub& s : subs)
            if (s.value > best.value) best = s;

        TuranResult out;
        out.n = n_;
        out.forbidden = f;
        out.value = best.value;
        std::vector<Triple> edges;
        for (std::size_t i : best.witness) edges.push_back(triples_[i]);
        out.witness = TripleSystem(n_, std::move(edges));
        out.exact = !stop_.load();
        out.nodes = nodes_.load();
        if (static_cast<int>(out.witness.size()) != out.value || contains(out.witness, f))
            throw std::logic_error("Turan witness failed verification");
        return out;
    }

private:
    Sub subtree(Host& host, std::size_t j) {
        Sub local;
        std::vector<std::size_t> cur{roots_[j]};
        host.add(triples_[roots_[j]]);
        std::vector<std::size_t> cand;
        for (std::size_t k = j + 1; k < roots_.size(); ++k)
            if (compatible(host, roots_[k])) cand.push_back(roots_[k]);
        dfs(host, cur, cand, local);
        host.remove(triples_[roots_[j]]);
        return local;
    }

    bool compatible(Host& host, std::size_t idx) {
        host.add(triples_[idx]);
        const bool ok = !copy_through(host, pattern_, triples_[idx]);
        host.remove(triples_[idx]);
        return ok;
    }

    bool tick() {
        const auto done = nodes_.fetch_add(1) + 1;
        if (budget_.nodes && done > *budget_.nodes) stop_.store(true);
        if (budget_.time && (done & 255U) == 0 && std::chrono::steady_clock::now() - start_ > *budget_.time)
            stop_.store(true);
        return !stop_.load();
    }

    void dfs(Host& host, std::vector<std::size_t>& cur, const std::vector<std::size_t>& cand, Sub& local) {
        if (!tick()) return;
        if (static_cast<int>(cur.size()) > local.value) {
            local.value = static_cast<int>(cur.size());
            local.witness = cur;
            int g = global_.load();
            while (local.value > g && !global_.compare_exchange_weak(g, local.value)) {
            }
        }
        for (std::size_t i = 0; i < cand.size(); ++i) {
            const int ub = static_cast<int>(cur.size() + cand.size() - i);
            if (ub <= local.value || ub < global_.load()) return;
            const std::size_t c = cand[i];
            cur.push_back(c);
            host.add(triples_[c]);
            std::vector<std::size_t> next;
            for (std::size_t k = i + 1; k < cand.size(); ++k)
                if (compatible(host, cand[k])) next.push_back(cand[k]);
            dfs(host, cur, next, local);
            host.remove(triples_[c]);
            cur.pop_back();
            if (stop_.load()) return;
        }
    }

    int n_;
    Pattern pattern_;
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Triple> triples_;
    std::vector<std::size_t> roots_;  // triples that are not copies of f on their own
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stop_{false};
    std::atomic<int> global_{0};
};

}  // namespace

TuranResult turan_number(int n, const TripleSystem& f, const Budget& budget, int workers) {
    if (n < 3) throw InvalidInput("turan_number needs n >= 3");
    if (f.empty()) throw InvalidInput("forbidden family must have at least one triple");
    if (workers < 1) throw InvalidInput("workers must be at least 1");
    return TuranSearch(n, f, budget).run(f, workers);
}

bool Theorem1Audit::all_pass() const {
    for (const auto& r : rows) {
        if (!r.construction_free) return false;
        if (r.exact && r.exact->exact && r.exact->value < r.bound) return false;
    }
    return true;
}

Theorem1Audit audit_theorem1(const Graph& forest, const std::vector<int>& ns, const Budget& budget, int max_exact_n,
                             int workers) {
    if (!is_forest(forest)) throw InvalidInput("audit_theorem1 needs a forest");
    Theorem1Audit out;
    out.forest = forest;
    out.sigma = sigma_expansion(forest).sigma;
    const int c = std::max(out.sigma - 1, 0);
    const auto plus = expand(forest).triples;
    for (int n : ns) {
        if (n < std::max(3, c)) throw InvalidInput("audit_theorem1 needs n >= max(3, sigma - 1)");
        Theorem1Row row;
        row.n = n;
        row.bound = c * choose2(n - c);
        row.construction_free = plus.empty() ? false : !contains_expansion(lower_bound_construction(n, c), forest);
        if (n <= max_exact_n && !plus.empty()) {
            row.exact = turan_number(n, plus, budget, workers);
            if (out.sigma > 1) row.ratio = row.exact->value / (static_cast<double>(out.sigma - 1) * choose2(n));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

bool JumpAudit::pass() const {
    if (construction == "none") return true;
    return family && free && static_cast<long long>(family->size()) == expected_edges;
}

JumpAudit audit_jump(const Graph& g, int n) {
    if (n < 3) throw InvalidInput("audit_jump needs n >= 3");
    JumpAudit out;
    out.graph = g;
    out.n = n;
    out.sigma = sigma_expansion(g).sigma;
    if (out.sigma >= 3) {
        out.construction = "core-2";
        out.expected_edges = 2 * choose2(n - 2);
        out.family = lower_bound_construction(n, 2);
    } else if (out.sigma == 2) {
        out.construction = "star";
        out.expected_edges = choose2(n - 1);
        out.family = star_construction(n);
        for (Vertex v = 0; v < g.order(); ++v) {
            int missed = 0;
            for (const Edge& e : g.edges()) missed += e.contains(v) ? 0 : 1;
            if (missed <= 1) out.star_plus_edge = true;
        }
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex w = u + 1; w < g.order(); ++w) {
                if (g.has_edge(u, w)) continue;
                bool covers = true;
                for (const Edge& e : g.edges()) covers = covers && (e.contains(u) || e.contains(w));
                if (covers) out.two_vertex_cover = true;
            }
    } else {
        out.construction = "none";
        return out;
    }
    out.free = !contains_expansion(*out.family, g);
    return out;
}

}  // namespace tripex
