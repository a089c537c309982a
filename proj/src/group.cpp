#include "zblock/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#include "zblock/field.hpp"

namespace zblock {

int64_t p_part(int64_t n, int64_t p) {
    int64_t r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

int vp(int64_t n, int64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int FiniteGroup::pow(int g, int64_t e) const {
    int o = order(g);
    e %= o;
    if (e < 0) e += o;
    int acc = 0, base = g;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FiniteGroup FiniteGroup::from_law(int n, const std::function<int(int, int)>& law,
                                  std::vector<std::string> labels, std::string desc) {
    if (n < 1 || n > kMaxGroupOrder)
        throw CapError("group order " + std::to_string(n) + " exceeds cap " +
                       std::to_string(kMaxGroupOrder) + " (" + desc + ")");
    FiniteGroup G;
    G.n_ = n;
    G.desc_ = std::move(desc);
    G.labels_ = std::move(labels);
    G.mul_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = law(a, b);
            if (c < 0 || c >= n) throw Error("group law out of range for " + G.desc_);
            G.mul_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(c);
        }
    // identity must sit at index 0
    for (int g = 0; g < n; ++g)
        if (G.mul(0, g) != g || G.mul(g, 0) != g)
            throw Error("identity is not at index 0 in " + G.desc_);
    // inverses: each row of the table is a permutation
    G.inv_.assign(n, 0xffff);
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen(n, false);
        for (int b = 0; b < n; ++b) {
            int c = G.mul(a, b);
            if (seen[c]) throw Error("multiplication row is not a permutation in " + G.desc_);
            seen[c] = true;
            if (c == 0) G.inv_[a] = static_cast<uint16_t>(b);
        }
    }
    // associativity, sampled deterministically
    uint64_t s = 0x2545F4914F6CDD1DULL;
    int samples = std::min(500, n * n);
    for (int i = 0; i < samples; ++i) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        int a = static_cast<int>((s >> 33) % n);
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        int b = static_cast<int>((s >> 33) % n);
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        int c = static_cast<int>((s >> 33) % n);
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
            throw Error("associativity failed in " + G.desc_);
    }
    // element orders and exponent
    G.order_.assign(n, 0);
    G.order_[0] = 1;
    int64_t expo = 1;
    for (int g = 1; g < n; ++g) {
        int o = 1, x = g;
        while (x != 0) {
            x = G.mul(x, g);
            ++o;
        }
        G.order_[g] = o;
        expo = std::lcm(expo, static_cast<int64_t>(o));
    }
    G.exponent_ = static_cast<int>(expo);
    G.abelian_ = true;
    for (int a = 0; a < n && G.abelian_; ++a)
        for (int b = a + 1; b < n; ++b)
            if (G.mul(a, b) != G.mul(b, a)) {
                G.abelian_ = false;
                break;
            }
    // greedy small generating set
    {
        std::vector<bool> in(n, false);
        in[0] = true;
        int covered = 1;
        while (covered < n) {
            int g = 0;
            while (in[g]) ++g;
            G.gens_.push_back(g);
            std::vector<int> work;
            for (int i = 0; i < n; ++i)
                if (in[i]) work.push_back(i);
            work.push_back(g);
            in[g] = true;
            for (size_t i = 0; i < work.size(); ++i) {
                for (size_t j = 0; j < work.size(); ++j) {
                    int c1 = G.mul(work[i], work[j]);
                    if (!in[c1]) {
                        in[c1] = true;
                        work.push_back(c1);
                    }
                }
            }
            covered = 0;
            for (int i = 0; i < n; ++i)
                if (in[i]) ++covered;
        }
    }
    if (G.labels_.empty()) {
        G.labels_.resize(n);
        for (int i = 0; i < n; ++i) G.labels_[i] = "g" + std::to_string(i);
    }
    return G;
}

std::vector<ConjClass> conj_classes(const FiniteGroup& G) {
    int n = G.size();
    std::vector<bool> seen(n, false);
    std::vector<ConjClass> out;
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        ConjClass c;
        c.rep = r;
        std::vector<bool> inorbit(n, false);
        for (int x = 0; x < n; ++x) {
            int y = G.conj(r, x);
            if (!inorbit[y]) {
                inorbit[y] = true;
                c.members.push_back(y);
                seen[y] = true;
            }
        }
        std::sort(c.members.begin(), c.members.end());
        out.push_back(std::move(c));
    }
    return out;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elems.begin(), elems.end(), g);
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup full_subgroup(const FiniteGroup& G) {
    Subgroup S;
    S.elems.resize(G.size());
    std::iota(S.elems.begin(), S.elems.end(), 0);
    return S;
}

Subgroup centralizer(const FiniteGroup& G, int g) {
    Subgroup S;
    for (int h = 0; h < G.size(); ++h)
        if (G.mul(h, g) == G.mul(g, h)) S.elems.push_back(h);
    return S;
}

Subgroup centralizer_of_set(const FiniteGroup& G, const std::vector<int>& set) {
    Subgroup S;
    for (int h = 0; h < G.size(); ++h) {
        bool ok = true;
        for (int s : set)
            if (G.mul(h, s) != G.mul(s, h)) {
                ok = false;
                break;
            }
        if (ok) S.elems.push_back(h);
    }
    return S;
}

Subgroup center(const FiniteGroup& G) { return centralizer_of_set(G, full_subgroup(G).elems); }

Subgroup closure(const FiniteGroup& G, std::vector<int> seed) {
    std::vector<bool> in(G.size(), false);
    std::vector<int> work;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = true;
            work.push_back(x);
        }
    };
    push(0);
    for (int s : seed) push(s);
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < work.size(); ++j) {
            push(G.mul(work[i], work[j]));
            push(G.mul(work[j], work[i]));
        }
    Subgroup S;
    for (int x = 0; x < G.size(); ++x)
        if (in[x]) S.elems.push_back(x);
    return S;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& S) {
    std::vector<bool> in(G.size(), false);
    for (int s : S.elems) in[s] = true;
    Subgroup N;
    for (int g = 0; g < G.size(); ++g) {
        bool ok = true;
        for (int s : S.elems)
            if (!in[G.conj(s, g)]) {
                ok = false;
                break;
            }
        if (ok) N.elems.push_back(g);
    }
    return N;
}

bool is_subgroup_abelian(const FiniteGroup& G, const Subgroup& S) {
    for (size_t i = 0; i < S.elems.size(); ++i)
        for (size_t j = i + 1; j < S.elems.size(); ++j)
            if (G.mul(S.elems[i], S.elems[j]) != G.mul(S.elems[j], S.elems[i])) return false;
    return true;
}

bool is_normal(const FiniteGroup& G, const Subgroup& N) {
    std::vector<bool> in(G.size(), false);
    for (int s : N.elems) in[s] = true;
    for (int g = 0; g < G.size(); ++g)
        for (int s : N.elems)
            if (!in[G.conj(s, g)]) return false;
    return true;
}

Subgroup derived_subgroup(const FiniteGroup& G) {
    std::vector<int> comms;
    std::vector<bool> seen(G.size(), false);
    for (int a = 0; a < G.size(); ++a)
        for (int b = 0; b < G.size(); ++b) {
            int c = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
            if (!seen[c]) {
                seen[c] = true;
                comms.push_back(c);
            }
        }
    return closure(G, comms);
}

Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& S, int g) {
    Subgroup T;
    T.elems.reserve(S.elems.size());
    for (int s : S.elems) T.elems.push_back(G.conj(s, g));
    std::sort(T.elems.begin(), T.elems.end());
    return T;
}

Subgroup sylow_p(const FiniteGroup& G, int64_t p) {
    int64_t target = p_part(G.size(), p);
    if (target == 1) return trivial_subgroup();
    // maximal-order p-element, least index
    int best = -1, besto = 0;
    for (int g = 1; g < G.size(); ++g) {
        int o = G.order(g);
        if (p_part(o, p) == o && o > besto) {
            besto = o;
            best = g;
        }
    }
    Subgroup S = closure(G, {best});
    while (S.order() < target) {
        Subgroup N = normalizer(G, S);
        bool grew = false;
        for (int h : N.elems) {
            if (S.contains(h)) continue;
            int o = G.order(h);
            if (p_part(o, p) != o) continue;
            std::vector<int> seed = S.elems;
            seed.push_back(h);
            Subgroup T = closure(G, seed);
            if (p_part(T.order(), p) == T.order() && T.order() > S.order()) {
                S = std::move(T);
                grew = true;
                break;
            }
        }
        if (!grew) throw Error("sylow_p: could not grow p-subgroup (internal)");
    }
    return S;
}

std::pair<int, int> p_decomposition(const FiniteGroup& G, int g, int64_t p) {
    int64_t o = G.order(g);
    int64_t pp = p_part(o, p);
    int64_t mp = o / pp;
    if (pp == 1) return {0, g};
    if (mp == 1) return {g, 0};
    // u = 1 mod pp, 0 mod mp  ->  g_p = g^u;  g_{p'} = g^{1-u}
    int64_t t = 1;
    {  // mp^{-1} mod pp
        int64_t a = mp % pp, old_r = a, r = pp, old_s = 1, s = 0;
        while (r != 0) {
            int64_t q = old_r / r, tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
        }
        t = ((old_s % pp) + pp) % pp;
    }
    int64_t u = (mp * t) % o;
    int gp = G.pow(g, u);
    int gpp = G.pow(g, ((1 - u) % o + o) % o);
    return {gp, gpp};
}

QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
    if (!is_normal(G, N)) throw InputError("quotient_group: subgroup is not normal");
    int n = G.size();
    std::vector<int> proj(n, -1);
    std::vector<int> reps;  // canonical (minimal) coset representatives, ascending
    for (int g = 0; g < n; ++g) {
        if (proj[g] >= 0) continue;
        int id = static_cast<int>(reps.size());
        // g is minimal in its coset because we scan ascending
        for (int s : N.elems) proj[G.mul(g, s)] = id;
        reps.push_back(g);
    }
    int q = static_cast<int>(reps.size());
    std::vector<std::string> labels(q);
    for (int i = 0; i < q; ++i) labels[i] = G.label(reps[i]) + "N";
    QuotientGroup out;
    out.proj = proj;
    out.group = FiniteGroup::from_law(
        q, [&](int a, int b) { return proj[G.mul(reps[a], reps[b])]; }, labels,
        G.descriptor() + "/N" + std::to_string(N.order()));
    return out;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& S) {
    SubgroupGroup out;
    out.to_parent = S.elems;
    out.from_parent.assign(G.size(), -1);
    for (size_t i = 0; i < S.elems.size(); ++i) out.from_parent[S.elems[i]] = static_cast<int>(i);
    std::vector<std::string> labels(S.elems.size());
    for (size_t i = 0; i < S.elems.size(); ++i) labels[i] = G.label(S.elems[i]);
    const auto& fp = out.from_parent;
    out.group = FiniteGroup::from_law(
        static_cast<int>(S.elems.size()),
        [&G, &S, &fp](int a, int b) { return fp[G.mul(S.elems[a], S.elems[b])]; }, labels,
        G.descriptor() + "|sub" + std::to_string(S.order()));
    return out;
}

std::vector<int> abelian_type(const FiniteGroup& G, const Subgroup& A, int64_t p) {
    if (p_part(A.order(), p) != A.order())
        throw InputError("abelian_type: not a p-group");
    if (!is_subgroup_abelian(G, A)) throw InputError("abelian_type: not abelian");
    std::vector<int> type;
    std::vector<int> B = A.elems;
    while (B.size() > 1) {
        int x = -1, besto = 0;
        for (int g : B)
            if (G.order(g) > besto) {
                besto = G.order(g);
                x = g;
            }
        type.push_back(vp(besto, p));
        std::vector<bool> inx(G.size(), false);
        for (int e : closure(G, {x}).elems) inx[e] = true;
        // grow a complement K of <x> in B: repeat single-element extensions
        // until no element of B extends K while keeping K meet <x> trivial
        Subgroup K = trivial_subgroup();
        bool changed = true;
        while (changed) {
            changed = false;
            for (int y : B) {
                if (K.contains(y)) continue;
                std::vector<int> seed = K.elems;
                seed.push_back(y);
                Subgroup K2 = closure(G, seed);
                bool meets = false;
                for (int e : K2.elems)
                    if (e != 0 && inx[e]) {
                        meets = true;
                        break;
                    }
                if (!meets) {
                    K = std::move(K2);
                    changed = true;
                }
            }
        }
        if (static_cast<int64_t>(K.order()) * besto != static_cast<int64_t>(B.size()))
            throw Error("abelian_type: complement extraction failed (internal)");
        B = K.elems;
    }
    return type;
}

int exponent_log(const FiniteGroup& G, const Subgroup& P, int64_t p) {
    if (p_part(P.order(), p) != P.order()) throw InputError("exponent_log: not a p-group");
    int maxo = 1;
    for (int g : P.elems) maxo = std::max(maxo, G.order(g));
    if (p_part(maxo, p) != maxo) throw Error("exponent_log: element order not a p-power");
    return vp(maxo, p);
}

bool is_metacyclic(const FiniteGroup& G, const Subgroup& P) {
    SubgroupGroup sg = subgroup_as_group(G, P);
    const FiniteGroup& H = sg.group;
    std::set<std::vector<int>> seen;
    for (int g = 0; g < H.size(); ++g) {
        Subgroup N = closure(H, {g});
        if (!seen.insert(N.elems).second) continue;
        // normality: enough to keep the generator's conjugates inside
        bool normal = true;
        for (int h = 0; h < H.size() && normal; ++h)
            if (!N.contains(H.conj(g, h))) normal = false;
        if (!normal) continue;
        QuotientGroup Q = quotient_group(H, N);
        int e = 0;
        for (int x = 0; x < Q.group.size(); ++x) e = std::max(e, Q.group.order(x));
        if (e == Q.group.size()) return true;  // cyclic quotient
    }
    return false;
}

namespace {

struct Fingerprint {
    int n, exponent, zsize, dsize;
    bool abelian;
    std::multiset<int> class_sizes;
    std::map<std::pair<int, int>, int> order_cent_hist;

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const FiniteGroup& G) {
    Fingerprint f;
    f.n = G.size();
    f.exponent = G.exponent();
    f.abelian = G.abelian();
    f.zsize = center(G).order();
    f.dsize = derived_subgroup(G).order();
    for (auto& c : conj_classes(G)) f.class_sizes.insert(c.size());
    for (int g = 0; g < G.size(); ++g)
        f.order_cent_hist[{G.order(g), centralizer(G, g).order()}]++;
    return f;
}

bool try_images(const FiniteGroup& P, const FiniteGroup& Q, const std::vector<int>& gens,
                std::vector<int>& images, size_t pos,
                const std::vector<std::vector<int>>& candidates) {
    if (pos == gens.size()) {
        // extend to a map via breadth-first products and verify
        std::vector<int> phi(P.size(), -1);
        phi[0] = 0;
        std::vector<int> queue{0};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int y = P.mul(x, gens[gi]);
                if (phi[y] < 0) {
                    phi[y] = Q.mul(phi[x], images[gi]);
                    queue.push_back(y);
                }
            }
        }
        for (int v : phi)
            if (v < 0) return false;  // gens should generate; defensive
        std::vector<bool> hit(Q.size(), false);
        for (int v : phi) {
            if (hit[v]) return false;
            hit[v] = true;
        }
        for (int x = 0; x < P.size(); ++x)
            for (size_t gi = 0; gi < gens.size(); ++gi)
                if (phi[P.mul(x, gens[gi])] != Q.mul(phi[x], images[gi])) return false;
        return true;
    }
    // prune: the partial images must generate a subgroup of matching order
    std::vector<int> partial_gens(gens.begin(), gens.begin() + pos + 1);
    for (int cand : candidates[pos]) {
        images[pos] = cand;
        std::vector<int> img(images.begin(), images.begin() + pos + 1);
        if (closure(Q, img).order() !=
            closure(P, partial_gens).order())
            continue;
        if (try_images(P, Q, gens, images, pos + 1, candidates)) return true;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const FiniteGroup& P, const FiniteGroup& Q) {
    if (P.size() != Q.size()) return false;
    if (P.size() > kMaxIsoOrder)
        throw CapError("is_isomorphic: order " + std::to_string(P.size()) + " exceeds cap " +
                       std::to_string(kMaxIsoOrder));
    Fingerprint fp = fingerprint(P), fq = fingerprint(Q);
    if (!(fp == fq)) return false;
    if (P.abelian()) return true;  // abelian groups: order histogram decides
    const std::vector<int>& gens = P.generators();
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int o = P.order(gens[i]);
        int cz = centralizer(P, gens[i]).order();
        for (int q = 0; q < Q.size(); ++q)
            if (Q.order(q) == o && centralizer(Q, q).order() == cz) candidates[i].push_back(q);
    }
    std::vector<int> images(gens.size(), -1);
    return try_images(P, Q, gens, images, 0, candidates);
}

bool conjugate_subgroup_leq(const FiniteGroup& G, const Subgroup& Q, const Subgroup& P) {
    if (Q.order() > P.order()) return false;
    std::vector<bool> inP(G.size(), false);
    for (int x : P.elems) inP[x] = true;
    for (int g = 0; g < G.size(); ++g) {
        bool ok = true;
        for (int q : Q.elems)
            if (!inP[G.conj(q, g)]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

bool conjugate_subgroup_eq(const FiniteGroup& G, const Subgroup& Q, const Subgroup& P) {
    if (Q.order() != P.order()) return false;
    return conjugate_subgroup_leq(G, Q, P);
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G, const Subgroup& S) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    std::vector<Subgroup> queue{trivial_subgroup()};
    seen.insert(queue[0].elems);
    for (size_t i = 0; i < queue.size(); ++i) {
        Subgroup cur = queue[i];
        out.push_back(cur);
        for (int y : S.elems) {
            if (cur.contains(y)) continue;
            std::vector<int> seed = cur.elems;
            seed.push_back(y);
            Subgroup ext = closure(G, seed);
            if (seen.insert(ext.elems).second) queue.push_back(ext);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// constructors

namespace {

std::string tuple_label(const std::vector<int>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

int64_t checked_pow_order(int64_t base, int exp) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > kMaxGroupOrder)
            throw CapError("group order exceeds cap " + std::to_string(kMaxGroupOrder));
    }
    return r;
}

}  // namespace

FiniteGroup make_cyclic(int n) {
    if (n < 1) throw InputError("Cyclic(n): n must be >= 1");
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "g^" + std::to_string(i);
    return FiniteGroup::from_law(
        n, [n](int a, int b) { return (a + b) % n; }, labels, "C" + std::to_string(n));
}

FiniteGroup make_abelian(const std::vector<int>& inv) {
    if (inv.empty()) throw InputError("Ab[...]: empty invariant list");
    int64_t n = 1;
    for (int m : inv) {
        if (m < 2) throw InputError("Ab[...]: invariants must be >= 2");
        n *= m;
        if (n > kMaxGroupOrder) throw CapError("Ab[...]: order exceeds cap");
    }
    int r = static_cast<int>(inv.size());
    auto decode = [&](int idx) {
        std::vector<int> t(r);
        for (int i = r - 1; i >= 0; --i) {
            t[i] = idx % inv[i];
            idx /= inv[i];
        }
        return t;
    };
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = tuple_label(decode(i));
    std::string desc = "Ab[";
    for (size_t i = 0; i < inv.size(); ++i)
        desc += (i ? "," : "") + std::to_string(inv[i]);
    desc += "]";
    return FiniteGroup::from_law(
        static_cast<int>(n),
        [&, r](int a, int b) {
            std::vector<int> ta = decode(a), tb = decode(b);
            int idx = 0;
            for (int i = 0; i < r; ++i) idx = idx * inv[i] + (ta[i] + tb[i]) % inv[i];
            return idx;
        },
        labels, desc);
}

FiniteGroup make_dihedral(int order) {
    if (order < 6 || order % 2 != 0) throw InputError("Dihedral: order must be even, >= 6");
    int n = order / 2;
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i) {
        int s = i / n, r = i % n;
        labels[i] = (s ? "sr^" : "r^") + std::to_string(r);
    }
    return FiniteGroup::from_law(
        order,
        [n](int a, int b) {
            int r1 = a % n, s1 = a / n, r2 = b % n, s2 = b / n;
            int r = s1 ? (r1 - r2 + n) % n : (r1 + r2) % n;
            return ((s1 + s2) % 2) * n + r;
        },
        labels, "D" + std::to_string(order));
}

FiniteGroup make_quaternion(int order) {
    if (order < 8 || (order & (order - 1)) != 0)
        throw InputError("Quaternion: order must be a power of two, >= 8");
    int half = order / 2;
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i) {
        int e = i / half, a = i % half;
        labels[i] = (e ? "yx^" : "x^") + std::to_string(a);
    }
    return FiniteGroup::from_law(
        order,
        [half](int i, int j) {
            int a = i % half, e = i / half, b = j % half, f = j / half;
            if (e == 0) return f * half + (a + b) % half;
            if (f == 0) return half + (a - b % half + half) % half;
            return ((a - b + half / 2) % half + half) % half;  // y^2 = x^{half/2}
        },
        labels, "Q" + std::to_string(order));
}

namespace {

std::string perm_label(const std::vector<int>& p) {
    // cycle notation, 1-based
    int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || p[i] == i) continue;
        s += "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) s += " ";
            s += std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

FiniteGroup group_from_perms(std::vector<std::vector<int>> elems, const std::string& desc) {
    std::sort(elems.begin(), elems.end());
    int n = static_cast<int>(elems.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[elems[i]] = i;
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = perm_label(elems[i]);
    int deg = static_cast<int>(elems[0].size());
    return FiniteGroup::from_law(
        n,
        [&](int a, int b) {
            std::vector<int> c(deg);
            for (int x = 0; x < deg; ++x) c[x] = elems[a][elems[b][x]];
            auto it = index.find(c);
            if (it == index.end()) throw Error("permutation set not closed");
            return it->second;
        },
        labels, desc);
}

}  // namespace

FiniteGroup make_symmetric(int n) {
    if (n < 1 || n > 6) throw CapError("Sym(n): n must be in [1,6]");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> elems;
    do elems.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return group_from_perms(std::move(elems), "S" + std::to_string(n));
}

FiniteGroup make_alternating(int n) {
    if (n < 3 || n > 6) throw CapError("Alt(n): n must be in [3,6]");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> elems;
    do {
        // parity by counting inversions
        int inv2 = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (base[i] > base[j]) ++inv2;
        if (inv2 % 2 == 0) elems.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return group_from_perms(std::move(elems), "A" + std::to_string(n));
}

FiniteGroup make_w_group(int d, int64_t p) {
    if (d < 3) throw InputError("W(d,p): d must be >= 3");
    if (!is_prime(p)) throw InputError("W(d,p): p must be prime");
    int64_t order = checked_pow_order(p, d);
    int64_t M = order / (p * p);      // p^{d-2}
    int64_t shift = M / p;            // p^{d-3}
    int n = static_cast<int>(order);
    auto decode = [&](int idx, int64_t& a, int64_t& b, int64_t& c) {
        c = idx % p;
        b = (idx / p) % p;
        a = idx / (p * p);
    };
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        int64_t a, b, c;
        decode(i, a, b, c);
        labels[i] = tuple_label({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
    }
    std::string desc = (d == 3 ? "ES+(" + std::to_string(p) + ")"
                               : "W(" + std::to_string(d) + "," + std::to_string(p) + ")");
    return FiniteGroup::from_law(
        n,
        [&, M, shift, p](int i, int j) {
            int64_t a, b, c, a2, b2, c2;
            decode(i, a, b, c);
            decode(j, a2, b2, c2);
            int64_t na = (a + a2 + shift * c * b2) % M;
            int64_t nb = (b + b2) % p;
            int64_t nc = (c + c2) % p;
            return static_cast<int>((na * p + nb) * p + nc);
        },
        labels, desc);
}

FiniteGroup make_extraspecial_plus(int64_t p) {
    if (!is_prime(p) || p == 2)
        throw InputError("ES+(p): p must be an odd prime (order p^3, exponent p)");
    return make_w_group(3, p);
}

FiniteGroup make_semidirect_cyclic(int n, int m, int64_t e) {
    if (n < 2 || m < 2) throw InputError("C_n:C_m: n, m must be >= 2");
    e = ((e % n) + n) % n;
    if (std::gcd(static_cast<int64_t>(n), e) != 1)
        throw InputError("C_n:C_m(e): action exponent must be invertible mod n");
    // e^m = 1 mod n required for the action of C_m to be well defined
    std::vector<int64_t> epow(static_cast<size_t>(m) + 1);
    epow[0] = 1;
    for (int i = 1; i <= m; ++i) epow[i] = (epow[i - 1] * e) % n;
    if (epow[m] != 1) throw InputError("C_n:C_m(e): e^m != 1 mod n");
    int64_t order = static_cast<int64_t>(n) * m;
    if (order > kMaxGroupOrder) throw CapError("C_n:C_m: order exceeds cap");
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i)
        labels[i] = tuple_label({i % n, i / n});
    std::string desc =
        "C" + std::to_string(n) + ":C" + std::to_string(m) + "(" + std::to_string(e) + ")";
    return FiniteGroup::from_law(
        static_cast<int>(order),
        [n, m, &epow](int i, int j) {
            int a = i % n, b = i / n, a2 = j % n, b2 = j / n;
            int na = static_cast<int>((a + epow[b] * a2) % n);
            int nb = (b + b2) % m;
            return nb * n + na;
        },
        labels, desc);
}

FiniteGroup make_direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    int64_t order = static_cast<int64_t>(A.size()) * B.size();
    if (order > kMaxGroupOrder) throw CapError("direct product order exceeds cap");
    int nb = B.size();
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i)
        labels[i] = "(" + A.label(i / nb) + "," + B.label(i % nb) + ")";
    return FiniteGroup::from_law(
        static_cast<int>(order),
        [&A, &B, nb](int i, int j) {
            return A.mul(i / nb, j / nb) * nb + B.mul(i % nb, j % nb);
        },
        labels, A.descriptor() + "*" + B.descriptor());
}

FiniteGroup make_perm_group(const std::vector<std::vector<std::vector<int>>>& gen_cycles,
                            const std::string& desc) {
    int deg = 0;
    for (auto& gen : gen_cycles)
        for (auto& cyc : gen)
            for (int pt : cyc) deg = std::max(deg, pt);
    if (deg < 1) throw InputError("perm: no points");
    std::vector<std::vector<int>> gens;
    for (auto& gen : gen_cycles) {
        std::vector<int> p(deg);
        std::iota(p.begin(), p.end(), 0);
        for (auto& cyc : gen) {
            for (size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i] - 1, to = cyc[(i + 1) % cyc.size()] - 1;
                if (from < 0 || from >= deg) throw InputError("perm: bad point");
                p[from] = to;
            }
        }
        // validate permutation
        std::vector<bool> seen(deg, false);
        for (int v : p) {
            if (v < 0 || v >= deg || seen[v]) throw InputError("perm: cycles overlap");
            seen[v] = true;
        }
        gens.push_back(p);
    }
    // closure under composition
    std::set<std::vector<int>> elems;
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    elems.insert(id);
    std::vector<std::vector<int>> work{id};
    for (size_t i = 0; i < work.size(); ++i) {
        for (auto& g : gens) {
            std::vector<int> c(deg);
            for (int x = 0; x < deg; ++x) c[x] = work[i][g[x]];
            if (elems.insert(c).second) {
                if (elems.size() > static_cast<size_t>(kMaxGroupOrder))
                    throw CapError("perm group order exceeds cap");
                work.push_back(std::move(c));
            }
        }
    }
    return group_from_perms(std::vector<std::vector<int>>(elems.begin(), elems.end()), desc);
}

// ---------------------------------------------------------------------------
// descriptor parser

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

FiniteGroup parse_atom(const std::string& atom) {
    static const std::regex re_semidirect(R"(^C(\d+):C(\d+)\((\d+)\)$)");
    static const std::regex re_cyclic(R"(^C(\d+)$)");
    static const std::regex re_abelian(R"(^Ab\[(\d+(?:,\d+)*)\]$)");
    static const std::regex re_dihedral(R"(^D(\d+)$)");
    static const std::regex re_quaternion(R"(^Q(\d+)$)");
    static const std::regex re_sym(R"(^S(\d+)$)");
    static const std::regex re_alt(R"(^A(\d+)$)");
    static const std::regex re_es(R"(^ES\+\((\d+)\)$)");
    static const std::regex re_w(R"(^W\((\d+),(\d+)\)$)");
    std::smatch m;
    if (std::regex_match(atom, m, re_semidirect))
        return make_semidirect_cyclic(std::stoi(m[1]), std::stoi(m[2]), std::stoll(m[3]));
    if (std::regex_match(atom, m, re_cyclic)) return make_cyclic(std::stoi(m[1]));
    if (std::regex_match(atom, m, re_abelian)) {
        std::vector<int> inv;
        std::string body = m[1];
        size_t pos = 0;
        while (pos < body.size()) {
            size_t c = body.find(',', pos);
            if (c == std::string::npos) c = body.size();
            inv.push_back(std::stoi(body.substr(pos, c - pos)));
            pos = c + 1;
        }
        return make_abelian(inv);
    }
    if (std::regex_match(atom, m, re_dihedral)) return make_dihedral(std::stoi(m[1]));
    if (std::regex_match(atom, m, re_quaternion)) return make_quaternion(std::stoi(m[1]));
    if (std::regex_match(atom, m, re_sym)) return make_symmetric(std::stoi(m[1]));
    if (std::regex_match(atom, m, re_alt)) return make_alternating(std::stoi(m[1]));
    if (std::regex_match(atom, m, re_es)) return make_extraspecial_plus(std::stoll(m[1]));
    if (std::regex_match(atom, m, re_w)) return make_w_group(std::stoi(m[1]), std::stoll(m[2]));
    if (atom.rfind("perm:[", 0) == 0 && atom.back() == ']') {
        std::string body = atom.substr(6, atom.size() - 7);
        std::vector<std::vector<std::vector<int>>> gens;
        std::vector<std::vector<int>> cur;
        size_t i = 0;
        while (i < body.size()) {
            char ch = body[i];
            if (ch == ' ') {
                ++i;
            } else if (ch == ',') {
                if (cur.empty()) throw InputError("perm: empty generator in " + atom);
                gens.push_back(cur);
                cur.clear();
                ++i;
            } else if (ch == '(') {
                size_t close = body.find(')', i);
                if (close == std::string::npos) throw InputError("perm: unbalanced parens");
                std::vector<int> cyc;
                size_t j = i + 1;
                while (j < close) {
                    while (j < close && body[j] == ' ') ++j;
                    size_t e = j;
                    while (e < close && isdigit(body[e])) ++e;
                    if (e > j) cyc.push_back(std::stoi(body.substr(j, e - j)));
                    j = e;
                    while (j < close && body[j] == ' ') ++j;
                }
                if (cyc.size() > 1) cur.push_back(cyc);
                i = close + 1;
            } else {
                throw InputError("perm: unexpected character '" + std::string(1, ch) + "'");
            }
        }
        if (!cur.empty()) gens.push_back(cur);
        if (gens.empty()) throw InputError("perm: no generators");
        return make_perm_group(gens, atom);
    }
    throw InputError("unrecognized group descriptor: '" + atom + "'");
}

}  // namespace

FiniteGroup group_build(const std::string& spec) {
    // split on top-level '*' (no descriptor atom contains one)
    std::vector<std::string> atoms;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t star = spec.find('*', pos);
        if (star == std::string::npos) star = spec.size();
        std::string atom = strip(spec.substr(pos, star - pos));
        if (atom.empty()) throw InputError("empty factor in group descriptor '" + spec + "'");
        atoms.push_back(atom);
        pos = star + 1;
        if (star == spec.size()) break;
    }
    FiniteGroup G = parse_atom(atoms[0]);
    for (size_t i = 1; i < atoms.size(); ++i) {
        FiniteGroup H = parse_atom(atoms[i]);
        G = make_direct_product(G, H);
    }
    return G;
}

}  // namespace zblock
