#include "zblock/blocks.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace zblock {

ClassStructure class_structure(const FiniteGroup& G) {
    ClassStructure cs;
    cs.classes = conj_classes(G);
    const int n = static_cast<int>(cs.classes.size());
    cs.class_of.assign(G.size(), -1);
    for (int c = 0; c < n; ++c)
        for (int m : cs.classes[c].members) cs.class_of[m] = c;
    cs.counts.assign(static_cast<size_t>(n) * n, {});
    std::vector<int64_t> dense(static_cast<size_t>(n) * n);
    for (int kcl = 0; kcl < n; ++kcl) {
        std::fill(dense.begin(), dense.end(), 0);
        const int z = cs.classes[kcl].rep;
        for (int x = 0; x < G.size(); ++x) {
            int i = cs.class_of[x];
            int j = cs.class_of[G.mul(G.inv(x), z)];
            ++dense[static_cast<size_t>(i) * n + j];
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int64_t c = dense[static_cast<size_t>(i) * n + j];
                if (c) cs.counts[static_cast<size_t>(i) * n + j].emplace_back(kcl, c);
            }
    }
    return cs;
}

GroupAlgebraCenter center_build(std::shared_ptr<const FiniteGroup> G, int64_t p, uint64_t seed,
                                int degree_cap, const ClassStructure* cs,
                                std::shared_ptr<const FieldCtx> shared_field) {
    if (!is_prime(p)) throw InputError("center_build: p must be prime");
    ClassStructure local;
    if (!cs) {
        local = class_structure(*G);
        cs = &local;
    }
    GroupAlgebraCenter Z;
    Z.G = G;
    Z.p = p;
    // splitting field: order of p modulo the p'-part of exp(G)
    int64_t m = G->exponent();
    while (m % p == 0) m /= p;
    Z.splitting_modulus = m;
    if (!shared_field) {
        int k = 1;
        if (m > 1) {
            int64_t v = p % m;
            k = 1;
            while (v != 1) {
                v = (v * p) % m;
                ++k;
                if (k > degree_cap)
                    throw CapError("center_build: splitting field degree exceeds cap " +
                                   std::to_string(degree_cap) + " for " + G->descriptor() +
                                   " at p=" + std::to_string(p));
            }
        }
        shared_field = std::make_shared<const FieldCtx>(field_make(p, k, seed));
    }
    Z.F = shared_field;
    const FieldCtx& F = *Z.F;

    const int n = static_cast<int>(cs->classes.size());
    Z.class_of = cs->class_of;
    Z.classes.resize(n);
    for (int c = 0; c < n; ++c) {
        ClassInfo ci;
        ci.rep = cs->classes[c].rep;
        ci.members = cs->classes[c].members;
        ci.rep_order = G->order(ci.rep);
        ci.p_regular = (ci.rep_order % p != 0);
        ci.defect = vp(G->size() / ci.size(), p);
        Z.classes[c] = std::move(ci);
    }
    // structure constants mod p (sparse)
    std::vector<SparseProd> table(static_cast<size_t>(n) * n);
    const int kk = F.k();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SparseProd sp;
            for (auto& [kcl, cnt] : cs->counts[static_cast<size_t>(i) * n + j]) {
                int64_t r = cnt % p;
                if (r == 0) continue;
                sp.idx.push_back(kcl);
                Fel c(static_cast<size_t>(kk), 0);
                c[0] = r;
                sp.co.insert(sp.co.end(), c.begin(), c.end());
            }
            table[static_cast<size_t>(i) * n + j] = std::move(sp);
        }
    std::vector<int64_t> one(static_cast<size_t>(n) * kk, 0);
    F.set_one(one.data());  // identity class is class 0
    std::vector<std::string> labels(n);
    for (int c = 0; c < n; ++c) labels[c] = "C" + std::to_string(c);
    Z.Z = CommAlgebra::build(F, n, std::move(table), std::move(one), std::move(labels));
    return Z;
}

namespace {

bool is_zero_vec(const std::vector<int64_t>& v) {
    for (int64_t x : v)
        if (x) return false;
    return true;
}

Subgroup center_of_subgroup(const FiniteGroup& G, const Subgroup& D) {
    Subgroup Z;
    for (int z : D.elems) {
        bool ok = true;
        for (int d : D.elems)
            if (G.mul(z, d) != G.mul(d, z)) {
                ok = false;
                break;
            }
        if (ok) Z.elems.push_back(z);
    }
    return Z;
}

void fill_defect_data(CenterAnalysis& an, Block& B, bool structure_flags) {
    const GroupAlgebraCenter& Z = an.Z;
    const FiniteGroup& G = *Z.G;
    const FieldCtx& F = *Z.F;
    const int kk = F.k();
    const int64_t p = Z.p;

    int d = 1 << 30;
    for (int c = 0; c < Z.dim(); ++c)
        if (!F.is_zero(B.piece.eigen[c].data())) d = std::min(d, Z.classes[c].defect);
    B.defect = d;

    B.defect_class = -1;
    for (int c = 0; c < Z.dim(); ++c) {
        if (Z.classes[c].defect != d) continue;
        if (!Z.classes[c].p_regular) continue;
        if (F.is_zero(B.piece.eigen[c].data())) continue;
        if (F.is_zero(B.piece.idempotent.data() + static_cast<size_t>(c) * kk)) continue;
        B.defect_class = c;
        break;
    }
    if (B.defect_class < 0)
        throw Error("defect class not found for a block of " + G.descriptor() +
                    " (internal: bad idempotent?)");
    // defect group: Sylow p-subgroup of the centralizer of the defect class rep
    Subgroup C = centralizer(G, Z.classes[B.defect_class].rep);
    SubgroupGroup sc = subgroup_as_group(G, C);
    Subgroup loc = sylow_p(sc.group, p);
    Subgroup D;
    for (int e : loc.elems) D.elems.push_back(sc.to_parent[e]);
    std::sort(D.elems.begin(), D.elems.end());
    int64_t pd = 1;
    for (int i = 0; i < B.defect; ++i) pd *= p;
    if (static_cast<int64_t>(D.order()) != pd)
        throw Error("defect group order mismatch |D| != p^d (internal)");
    B.defect_group = std::move(D);
    B.e_log = exponent_log(G, B.defect_group, p);
    B.d_center_order = center_of_subgroup(G, B.defect_group).order();

    B.d_abelian = is_subgroup_abelian(G, B.defect_group);
    if (B.d_abelian) B.d_abelian_type = abelian_type(G, B.defect_group, p);
    int maxo = 1;
    for (int g : B.defect_group.elems) maxo = std::max(maxo, G.order(g));
    B.d_cyclic = (maxo == B.defect_group.order());
    B.d_is_es_plus =
        (p != 2 && B.defect == 3 && B.e_log == 1 && !B.d_abelian);
    if (structure_flags) {
        B.d_metacyclic = is_metacyclic(G, B.defect_group);
        if (B.d_abelian || B.defect < 3) {
            B.d_is_w = false;
        } else if (B.defect_group.order() <= kMaxIsoOrder) {
            SubgroupGroup dg = subgroup_as_group(G, B.defect_group);
            FiniteGroup W = make_w_group(B.defect, p);
            B.d_is_w = is_isomorphic(dg.group, W);
        } else {
            B.d_is_w = std::nullopt;
        }
    }

    // principal block: lambda(C+) = |C| mod p for every class
    B.principal = true;
    for (int c = 0; c < Z.dim() && B.principal; ++c) {
        Fel want = F.from_int(Z.classes[c].size());
        if (B.piece.eigen[c] != want) B.principal = false;
    }
}

}  // namespace

const Block& CenterAnalysis::principal() const {
    for (const Block& b : blocks)
        if (b.principal) return b;
    throw Error("no principal block found (internal)");
}

CenterAnalysis analyze_center(std::shared_ptr<const FiniteGroup> G, int64_t p, uint64_t seed,
                              int degree_cap, const ClassStructure* cs,
                              std::shared_ptr<const FieldCtx> shared_field) {
    CenterAnalysis an;
    an.Z = center_build(G, p, seed, degree_cap, cs, shared_field);
    an.seed = seed;
    an.degree_cap = degree_cap;
    const GroupAlgebraCenter& Z = an.Z;
    const FieldCtx& F = *Z.F;

    std::vector<LocalPiece> pieces = decompose_local(Z.Z);
    an.class_dg.assign(Z.dim(), std::nullopt);

    // generator hint for the Loewy iteration when ZB = FG for an abelian
    // p-group: the augmentation ideal is generated by (gen - 1)
    bool abelian_pgroup =
        G->abelian() && p_part(G->size(), p) == G->size() && pieces.size() == 1;
    std::vector<std::vector<int64_t>> gens_hint;
    if (abelian_pgroup) {
        for (int g : G->generators()) {
            std::vector<int64_t> v(static_cast<size_t>(Z.dim()) * F.k(), 0);
            F.set_one(v.data() + static_cast<size_t>(Z.class_of[g]) * F.k());
            F.sub_inplace(v.data(), Z.Z.one().data());
            gens_hint.push_back(std::move(v));
        }
    }

    for (size_t i = 0; i < pieces.size(); ++i) {
        Block B;
        B.index = static_cast<int>(i);
        B.piece = std::move(pieces[i]);
        B.dim_zb = B.piece.dim();
        B.radical = radical_of_piece(Z.Z, B.piece);
        B.loewy = loewy_series(Z.Z, B.radical.rows, B.dim_zb,
                               abelian_pgroup ? &gens_hint : nullptr);
        fill_defect_data(an, B, /*structure_flags=*/true);
        B.reynolds = reynolds_ideal(Z, B);
        B.ll_zb_mod_rb = ll_center_mod_reynolds(Z, B, B.reynolds);
        B.kulshammer_exponent = 0;
        for (size_t r = 0; r < B.radical.rows.dim(); ++r) {
            std::vector<int64_t> z = B.radical.rows.row(r);
            auto t = nilpotency_p_exponent(Z.Z, z);
            if (!t) throw Error("radical element not nilpotent (internal)");
            B.kulshammer_exponent = std::max(B.kulshammer_exponent, *t);
        }
        an.blocks.push_back(std::move(B));
    }
    return an;
}

std::shared_ptr<SubAnalysis> analyze_subgroup(CenterAnalysis& an, const Subgroup& H) {
    auto it = an.sub_cache.find(H.elems);
    if (it != an.sub_cache.end()) return it->second;
    auto sub = std::make_shared<SubAnalysis>();
    sub->sg = subgroup_as_group(*an.Z.G, H);
    auto Hg = std::make_shared<const FiniteGroup>(sub->sg.group);
    sub->an = analyze_center(Hg, an.Z.p, an.seed, an.degree_cap, nullptr, an.Z.F);
    an.sub_cache.emplace(H.elems, sub);
    return sub;
}

std::vector<int64_t> brauer_image(const GroupAlgebraCenter& ZG, const GroupAlgebraCenter& ZH,
                                  const SubgroupGroup& sg, const int64_t* z) {
    const FieldCtx& F = *ZG.F;
    const int kk = F.k();
    std::vector<int64_t> out(static_cast<size_t>(ZH.dim()) * kk, 0);
    for (int d = 0; d < ZH.dim(); ++d) {
        int parent = sg.to_parent[ZH.classes[d].rep];
        int c = ZG.class_of[parent];
        std::copy(z + static_cast<size_t>(c) * kk, z + static_cast<size_t>(c + 1) * kk,
                  out.data() + static_cast<size_t>(d) * kk);
    }
    return out;
}

std::optional<int> induced_block(const CenterAnalysis& an, const CenterAnalysis& sub,
                                 const SubgroupGroup& sg, const Block& b) {
    const GroupAlgebraCenter& ZG = an.Z;
    const GroupAlgebraCenter& ZH = sub.Z;
    const FieldCtx& F = *ZG.F;
    // lambda_cand(C+) = lambda_b((C meet H)+) = sum over H-classes inside C
    std::vector<Fel> cand(ZG.dim(), F.zero());
    for (int d = 0; d < ZH.dim(); ++d) {
        int c = ZG.class_of[sg.to_parent[ZH.classes[d].rep]];
        cand[c] = F.add(cand[c], b.piece.eigen[d]);
    }
    for (const Block& B : an.blocks)
        if (B.piece.eigen == cand) return B.index;
    return std::nullopt;
}

DominatedResult dominated_block(CenterAnalysis& can, const Block& b, int u_local) {
    const GroupAlgebraCenter& ZC = can.Z;
    const FiniteGroup& C = *ZC.G;
    const FieldCtx& F = *ZC.F;
    const int kk = F.k();
    Subgroup U = closure(C, {u_local});
    QuotientGroup Q = quotient_group(C, U);
    // mu(eps_b): element coefficients pushed through the projection
    std::vector<int64_t> qco(static_cast<size_t>(Q.group.size()) * kk, 0);
    for (int g = 0; g < C.size(); ++g) {
        const int64_t* c =
            b.piece.idempotent.data() + static_cast<size_t>(ZC.class_of[g]) * kk;
        F.add_inplace(qco.data() + static_cast<size_t>(Q.proj[g]) * kk, c);
    }
    auto Qg = std::make_shared<const FiniteGroup>(std::move(Q.group));
    CenterAnalysis qan = analyze_center(Qg, ZC.p, can.seed, can.degree_cap, nullptr, ZC.F);
    // the image must be constant on classes of the quotient
    std::vector<int64_t> v(static_cast<size_t>(qan.Z.dim()) * kk);
    for (int cls = 0; cls < qan.Z.dim(); ++cls) {
        const int64_t* rep = qco.data() + static_cast<size_t>(qan.Z.classes[cls].rep) * kk;
        for (int m : qan.Z.classes[cls].members)
            if (!F.eq(rep, qco.data() + static_cast<size_t>(m) * kk))
                throw Error("dominated_block: image not central (internal)");
        std::copy(rep, rep + kk, v.data() + static_cast<size_t>(cls) * kk);
    }
    for (const Block& bb : qan.blocks)
        if (bb.piece.idempotent == v) return DominatedResult{bb.ll_zb(), bb.defect};
    throw Error("dominated_block: projected idempotent is not a block idempotent (internal)");
}

std::vector<Subsection> subsections(CenterAnalysis& an, const Block& B) {
    const GroupAlgebraCenter& Z = an.Z;
    const FiniteGroup& G = *Z.G;
    const int64_t p = Z.p;
    const Subgroup& D = B.defect_group;
    std::vector<bool> inD(G.size(), false);
    for (int g : D.elems) inD[g] = true;
    Subgroup ZD = center_of_subgroup(G, D);

    std::vector<Subsection> out;
    for (int c = 0; c < Z.dim(); ++c) {
        const ClassInfo& ci = Z.classes[c];
        if (p_part(ci.rep_order, p) != ci.rep_order) continue;  // p-elements only
        std::vector<int> cands;
        for (int m : ci.members)
            if (inD[m]) cands.push_back(m);
        if (cands.empty()) continue;
        if (c == 0) {
            Subsection s;
            s.u = 0;
            s.u_class = 0;
            s.u_order = 1;
            s.major = true;
            s.normalized = true;
            s.b_defect = B.defect;
            s.ll_zb = B.ll_zb();
            s.ll_zb_mod_rb = B.ll_zb_mod_rb;
            s.ll_zbbar = B.ll_zb();
            out.push_back(s);
            continue;
        }
        int u0 = cands[0];
        Subgroup C0 = centralizer(G, u0);
        std::shared_ptr<SubAnalysis> sub = analyze_subgroup(an, C0);
        for (const Block& b : sub->an.blocks) {
            auto ind = induced_block(an, sub->an, sub->sg, b);
            if (!ind || *ind != B.index) continue;
            Subsection s;
            s.u_class = c;
            s.u_order = ci.rep_order;
            s.b_defect = b.defect;
            s.ll_zb = b.ll_zb();
            s.ll_zb_mod_rb = b.ll_zb_mod_rb;
            s.induced_ok = true;
            // dominated block of C_G(u)/<u>
            DominatedResult dom =
                dominated_block(sub->an, b, sub->sg.from_parent[u0]);
            s.ll_zbbar = dom.ll_zbbar;
            // normalize: find x in class(u) meet D and u0^h = x with
            // (defect group of b)^h = C_D(x); first hit in element order
            Subgroup Db;
            for (int e : b.defect_group.elems) Db.elems.push_back(sub->sg.to_parent[e]);
            std::sort(Db.elems.begin(), Db.elems.end());
            int64_t want = 1;
            for (int i = 0; i < b.defect; ++i) want *= p;
            bool found = false;
            for (int x : cands) {
                std::vector<int> cdx;
                for (int dd : D.elems)
                    if (G.mul(dd, x) == G.mul(x, dd)) cdx.push_back(dd);
                if (static_cast<int64_t>(cdx.size()) != want) continue;
                for (int h = 0; h < G.size() && !found; ++h) {
                    if (G.conj(u0, h) != x) continue;
                    std::vector<int> dbh;
                    dbh.reserve(Db.elems.size());
                    for (int dd : Db.elems) dbh.push_back(G.conj(dd, h));
                    std::sort(dbh.begin(), dbh.end());
                    if (dbh == cdx) {
                        s.u = x;
                        found = true;
                    }
                }
                if (found) break;
            }
            if (!found) {
                s.u = u0;
                s.normalized = false;
            } else {
                s.normalized = true;
            }
            s.major = found ? ZD.contains(s.u) : (s.b_defect == B.defect);
            out.push_back(s);
        }
    }
    return out;
}

RowBasis reynolds_ideal(const GroupAlgebraCenter& Z, const Block& B) {
    const FieldCtx& F = *Z.F;
    const FiniteGroup& G = *Z.G;
    const int kk = F.k();
    const int n = Z.dim();
    // p'-section of class C: the class of the p'-part of its representative
    std::vector<int> section(n);
    for (int c = 0; c < n; ++c) {
        auto [gp, gpp] = p_decomposition(G, Z.classes[c].rep, Z.p);
        section[c] = Z.class_of[gpp];
    }
    RowBasis rows(F, n);
    std::vector<int64_t> v(static_cast<size_t>(n) * kk);
    std::vector<int64_t> w(static_cast<size_t>(n) * kk);
    for (int s = 0; s < n; ++s) {
        if (!Z.classes[s].p_regular) continue;
        std::fill(v.begin(), v.end(), 0);
        for (int c = 0; c < n; ++c)
            if (section[c] == s) F.set_one(v.data() + static_cast<size_t>(c) * kk);
        Z.Z.mul(w.data(), v.data(), B.piece.idempotent.data());
        rows.insert(w.data());
    }
    return rows;
}

int ll_center_mod_reynolds(const GroupAlgebraCenter& Z, const Block& B, const RowBasis& rb) {
    if (static_cast<int>(rb.dim()) == B.dim_zb) return 0;  // zero quotient convention
    const FieldCtx& F = *Z.F;
    if (B.dim_zb == Z.dim()) {
        // the block is the whole center
        QuotientAlgebra Q = quotient_algebra(Z.Z, rb);
        RowBasis JQ(F, Q.alg.dim());
        for (size_t r = 0; r < B.radical.rows.dim(); ++r)
            JQ.insert(Q.project(Z.Z, B.radical.rows.row(r).data()));
        return loewy_series(Q.alg, JQ, Q.alg.dim()).length;
    }
    SubAlgebra sub = materialize(Z.Z, B.piece.rows, B.piece.idempotent.data());
    RowBasis rloc(F, sub.alg.dim());
    for (size_t r = 0; r < rb.dim(); ++r)
        rloc.insert(sub.to_local(Z.Z, rb.row(r).data()));
    QuotientAlgebra Q = quotient_algebra(sub.alg, rloc);
    RowBasis JQ(F, Q.alg.dim());
    for (size_t r = 0; r < B.radical.rows.dim(); ++r) {
        std::vector<int64_t> loc = sub.to_local(Z.Z, B.radical.rows.row(r).data());
        JQ.insert(Q.project(sub.alg, loc.data()));
    }
    return loewy_series(Q.alg, JQ, Q.alg.dim()).length;
}

namespace {

const Subgroup& class_defect_group(CenterAnalysis& an, int c) {
    if (!an.class_dg[c]) {
        const FiniteGroup& G = *an.Z.G;
        Subgroup C = centralizer(G, an.Z.classes[c].rep);
        SubgroupGroup sc = subgroup_as_group(G, C);
        Subgroup loc = sylow_p(sc.group, an.Z.p);
        Subgroup D;
        for (int e : loc.elems) D.elems.push_back(sc.to_parent[e]);
        std::sort(D.elems.begin(), D.elems.end());
        an.class_dg[c] = std::move(D);
    }
    return *an.class_dg[c];
}

RowBasis z_ideal_impl(CenterAnalysis& an, const Block& B, const Subgroup& P, bool strict) {
    const GroupAlgebraCenter& Z = an.Z;
    const FieldCtx& F = *Z.F;
    const int kk = F.k();
    const int n = Z.dim();
    RowBasis rows(F, n);
    std::vector<int64_t> v(static_cast<size_t>(n) * kk), w(v.size());
    for (int c = 0; c < n; ++c) {
        const Subgroup& dg = class_defect_group(an, c);
        if (strict && dg.order() >= P.order()) continue;
        if (!conjugate_subgroup_leq(*Z.G, dg, P)) continue;
        std::fill(v.begin(), v.end(), 0);
        F.set_one(v.data() + static_cast<size_t>(c) * kk);
        Z.Z.mul(w.data(), v.data(), B.piece.idempotent.data());
        rows.insert(w.data());
    }
    return rows;
}

}  // namespace

RowBasis z_leq_ideal(CenterAnalysis& an, const Block& B, const Subgroup& P) {
    return z_ideal_impl(an, B, P, false);
}

RowBasis z_lt_ideal(CenterAnalysis& an, const Block& B, const Subgroup& P) {
    return z_ideal_impl(an, B, P, true);
}

RowBasis radical_power(const GroupAlgebraCenter& Z, const Block& B, int t) {
    const FieldCtx& F = *Z.F;
    if (t <= 0) return B.piece.rows;
    RowBasis cur = B.radical.rows;
    std::vector<int64_t> prodv(static_cast<size_t>(Z.dim()) * F.k());
    for (int step = 1; step < t && cur.dim() > 0; ++step) {
        RowBasis next(F, Z.dim());
        for (size_t r = 0; r < cur.dim(); ++r)
            for (size_t s = 0; s < B.radical.rows.dim(); ++s) {
                Z.Z.mul(prodv.data(), cur.row(r).data(), B.radical.rows.row(s).data());
                next.insert(prodv.data());
            }
        cur = std::move(next);
    }
    return cur;
}

LoewyResult ll_group_algebra_pgroup(const FiniteGroup& D, int64_t p) {
    if (D.size() > kMaxGroupAlgebraOrder)
        throw CapError("ll_group_algebra_pgroup: |D| = " + std::to_string(D.size()) +
                       " exceeds cap " + std::to_string(kMaxGroupAlgebraOrder));
    if (p_part(D.size(), p) != D.size())
        throw InputError("ll_group_algebra_pgroup: not a p-group for p = " + std::to_string(p));
    FieldCtx F = field_make(p, 1);
    const int n = D.size();
    LoewyResult res;
    res.dims = {n};
    if (n == 1) {
        res.length = 1;
        res.dims.push_back(0);
        return res;
    }
    // augmentation ideal: span{g - 1}, iterated against (gen - 1) multipliers
    RowBasis J(F, n);
    std::vector<int64_t> v(n, 0);
    for (int g = 1; g < n; ++g) {
        std::fill(v.begin(), v.end(), 0);
        v[g] = 1 % p;
        v[0] = (p - 1) % p;
        J.insert(v.data());
    }
    res.dims.push_back(static_cast<int>(J.dim()));
    // right multiplication by gen: (x*gen)[idx] = x[idx * gen^{-1}]
    std::vector<std::vector<int>> perms;
    for (int g : D.generators()) {
        std::vector<int> perm(n);
        int gi = D.inv(g);
        for (int idx = 0; idx < n; ++idx) perm[idx] = D.mul(idx, gi);
        perms.push_back(std::move(perm));
    }
    RowBasis cur = J;
    int t = 1;
    std::vector<int64_t> cand(n);
    while (cur.dim() > 0) {
        RowBasis next(F, n);
        for (size_t r = 0; r < cur.dim(); ++r) {
            const std::vector<int64_t>& x = cur.row(r);
            for (const auto& perm : perms) {
                for (int idx = 0; idx < n; ++idx) {
                    int64_t t2 = x[perm[idx]] - x[idx];
                    cand[idx] = t2 < 0 ? t2 + p : t2;
                }
                next.insert(cand.data());
            }
        }
        if (next.dim() >= cur.dim())
            throw Error("ll_group_algebra_pgroup: augmentation powers not shrinking (internal)");
        ++t;
        res.dims.push_back(static_cast<int>(next.dim()));
        cur = std::move(next);
    }
    res.length = t;
    return res;
}

std::vector<std::string> verify_center_invariants(CenterAnalysis& an) {
    std::vector<std::string> fails;
    const GroupAlgebraCenter& Z = an.Z;
    const FiniteGroup& G = *Z.G;
    const FieldCtx& F = *Z.F;
    const int kk = F.k();
    const int64_t p = Z.p;
    auto where = [&](const std::string& what) {
        return G.descriptor() + " p=" + std::to_string(p) + ": " + what;
    };

    // sum of block dimensions = number of classes
    int total = 0;
    for (auto& B : an.blocks) total += B.dim_zb;
    if (total != Z.dim()) fails.push_back(where("sum dim ZB != #classes"));

    int pregular = 0;
    for (auto& c : Z.classes)
        if (c.p_regular) ++pregular;
    if (static_cast<int>(an.blocks.size()) > pregular)
        fails.push_back(where("#blocks > #p-regular classes"));

    for (auto& B : an.blocks) {
        // Osima: idempotents supported on p-regular classes
        for (int c = 0; c < Z.dim(); ++c)
            if (!Z.classes[c].p_regular &&
                !F.is_zero(B.piece.idempotent.data() + static_cast<size_t>(c) * kk))
                fails.push_back(where("block " + std::to_string(B.index) +
                                      " idempotent supported on a p-singular class"));
        // |D| = p^d
        int64_t want = 1;
        for (int i = 0; i < B.defect; ++i) want *= p;
        if (B.defect_group.order() != want)
            fails.push_back(where("block " + std::to_string(B.index) + " has |D| != p^d"));
        // central character is multiplicative
        std::vector<int64_t> lam(static_cast<size_t>(Z.dim()) * kk);
        for (int c = 0; c < Z.dim(); ++c)
            std::copy(B.piece.eigen[c].begin(), B.piece.eigen[c].end(),
                      lam.data() + static_cast<size_t>(c) * kk);
        int64_t lhs[16], rhs[16], tmp[16];
        for (int i = 0; i < Z.dim(); ++i)
            for (int j = 0; j < Z.dim(); ++j) {
                F.mul(lhs, B.piece.eigen[i].data(), B.piece.eigen[j].data());
                F.set_zero(rhs);
                const SparseProd& pr = Z.Z.prod(i, j);
                for (size_t tt = 0; tt < pr.idx.size(); ++tt) {
                    F.mul(tmp, pr.co.data() + tt * kk, B.piece.eigen[pr.idx[tt]].data());
                    F.add_inplace(rhs, tmp);
                }
                if (!F.eq(lhs, rhs)) {
                    fails.push_back(where("block " + std::to_string(B.index) +
                                          " central character not multiplicative"));
                    i = Z.dim();
                    break;
                }
            }
        // Reynolds kills the radical
        IdealBasis prod = ideal_product(Z.Z, B.reynolds, B.radical.rows);
        if (prod.rows.dim() != 0)
            fails.push_back(where("block " + std::to_string(B.index) + ": RB * J(ZB) != 0"));
    }

    // principal block defect group is a Sylow subgroup (up to conjugacy)
    if (G.size() % p == 0) {
        const Block& B0 = an.principal();
        Subgroup syl = sylow_p(G, p);
        if (!conjugate_subgroup_eq(G, B0.defect_group, syl))
            fails.push_back(where("principal defect group is not Sylow"));
    }

    // Brauer homomorphism: multiplicative on Z(FG) for P = <u>, u running
    // over p-element class representatives; Brauer's third main theorem
    for (int c = 0; c < Z.dim(); ++c) {
        if (c == 0) continue;
        const ClassInfo& ci = Z.classes[c];
        if (p_part(ci.rep_order, p) != ci.rep_order) continue;
        Subgroup H = centralizer(G, ci.rep);
        std::shared_ptr<SubAnalysis> sub = analyze_subgroup(an, H);
        const GroupAlgebraCenter& ZH = sub->an.Z;
        const int hn = ZH.dim();
        std::vector<int64_t> vi(static_cast<size_t>(Z.dim()) * kk),
            vj(static_cast<size_t>(Z.dim()) * kk), vij(static_cast<size_t>(Z.dim()) * kk),
            prod(static_cast<size_t>(hn) * kk);
        for (int i = 0; i < Z.dim(); ++i) {
            std::fill(vi.begin(), vi.end(), 0);
            F.set_one(vi.data() + static_cast<size_t>(i) * kk);
            std::vector<int64_t> si = brauer_image(Z, ZH, sub->sg, vi.data());
            for (int j = i; j < Z.dim(); ++j) {
                std::fill(vj.begin(), vj.end(), 0);
                F.set_one(vj.data() + static_cast<size_t>(j) * kk);
                std::vector<int64_t> sj = brauer_image(Z, ZH, sub->sg, vj.data());
                Z.Z.mul(vij.data(), vi.data(), vj.data());
                std::vector<int64_t> sij = brauer_image(Z, ZH, sub->sg, vij.data());
                ZH.Z.mul(prod.data(), si.data(), sj.data());
                if (prod != sij) {
                    fails.push_back(where("Brauer homomorphism not multiplicative at class " +
                                          std::to_string(c)));
                    i = Z.dim();
                    break;
                }
            }
        }
        // induced principal = principal
        auto ind = induced_block(an, sub->an, sub->sg, sub->an.principal());
        if (!ind || !an.blocks[*ind].principal)
            fails.push_back(where("induced principal block is not principal at class " +
                                  std::to_string(c)));
        // every block of C_G(u) induces to some block of G
        for (const Block& b : sub->an.blocks)
            if (!induced_block(an, sub->an, sub->sg, b))
                fails.push_back(where("b^G undefined for a p-element centralizer block"));
    }
    return fails;
}

}  // namespace zblock
