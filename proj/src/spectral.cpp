#include "dhh/spectral.hpp"

#include <algorithm>

#include "dhh/errors.hpp"

namespace dhh::spectral {

using diffmod::DiffModule;
using diffmod::DiffRing;
using diffmod::fix_module;
using diffmod::quotient_map;
using diffmod::coinv_module;
using linfp::image_basis;
using linfp::kernel_basis;
using linfp::rank;
using linfp::solve;
using linfp::SpanSolver;
using linfp::vec_is_zero;

namespace {

Vec concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Matrix sigma_minus_one(const DiffModule& m) {
    return m.sigma - Matrix::identity(m.dim, m.p());
}

}  // namespace

HyperComplex cone(const CochainComplex& c) {
    const std::uint32_t tlen = c.length();
    const std::uint32_t p = c.terms.front().p();
    HyperComplex h;
    for (std::uint32_t n = 0; n < tlen; ++n)
        h.dims.push_back(c.terms[n].dim + (n ? c.terms[n - 1].dim : 0));
    for (std::uint32_t n = 0; n + 1 < tlen; ++n) {
        const std::uint32_t rn = c.terms[n].dim;
        const std::uint32_t rp = n ? c.terms[n - 1].dim : 0;
        Matrix d(h.dims[n + 1], h.dims[n], p);
        const Matrix& dn = c.d[n];
        Matrix sm1 = sigma_minus_one(c.terms[n]);
        for (std::uint32_t r = 0; r < dn.rows(); ++r)
            for (std::uint32_t cc = 0; cc < rn; ++cc) d.set(r, cc, dn.at(r, cc));
        for (std::uint32_t r = 0; r < rn; ++r)
            for (std::uint32_t cc = 0; cc < rn; ++cc) d.set(dn.rows() + r, cc, sm1.at(r, cc));
        if (n) {
            const Matrix& dprev = c.d[n - 1];
            for (std::uint32_t r = 0; r < rn; ++r)
                for (std::uint32_t cc = 0; cc < rp; ++cc)
                    d.set(dn.rows() + r, rn + cc, (p - dprev.at(r, cc)) % p);
        }
        h.d.push_back(std::move(d));
    }
    for (std::uint32_t n = 0; n + 1 < h.d.size(); ++n)
        if (!(h.d[n + 1] * h.d[n]).is_zero())
            throw AxiomViolation("cone: D o D != 0 at degree " + std::to_string(n));
    return h;
}

std::vector<std::uint32_t> hyper_dims(const CochainComplex& c) {
    HyperComplex h = cone(c);
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = 0; n < h.d.size(); ++n) {
        std::uint32_t z = h.dims[n] - rank(h.d[n]);
        std::uint32_t b = n ? rank(h.d[n - 1]) : 0;
        out.push_back(z - b);
    }
    return out;
}

namespace {

// Fix(k) as a difference ring with identity sigma, plus coordinates.
struct FixRing {
    DiffRingPtr ring;
    Matrix basis;  // rows in k-coords
};

FixRing make_fix_ring(const DiffRingPtr& k) {
    Matrix b = linfp::kernel_basis_matrix(k->sigma - Matrix::identity(k->dim, k->p));
    SpanSolver sol(b);
    DiffRing fk;
    fk.p = k->p;
    fk.dim = b.rows();
    fk.sigma = Matrix::identity(b.rows(), k->p);
    fk.unit = sol.coords_or_throw(k->unit, "fix ring unit");
    fk.mult.assign(fk.dim, std::vector<Vec>(fk.dim));
    for (std::uint32_t i = 0; i < fk.dim; ++i)
        for (std::uint32_t j = 0; j < fk.dim; ++j)
            fk.mult[i][j] = sol.coords_or_throw(k->mul_vec(b.row_vec(i), b.row_vec(j)), "fix ring mult");
    FixRing fr;
    fr.ring = std::make_shared<const DiffRing>(std::move(fk));
    fr.basis = std::move(b);
    return fr;
}

}  // namespace

FixComplexData fix_complex(const CochainComplex& c) {
    FixComplexData fd;
    FixRing fr = make_fix_ring(c.terms.front().ring);
    fd.fixk = fr.ring;
    const std::uint32_t p = c.terms.front().p();
    for (std::uint32_t n = 0; n < c.length(); ++n) {
        Matrix basis = fix_module(c.terms[n]).basis;
        SpanSolver sol(basis);
        DiffModule t;
        t.ring = fr.ring;
        t.dim = basis.rows();
        t.sigma = Matrix::identity(basis.rows(), p);
        for (std::uint32_t lam = 0; lam < fr.ring->dim; ++lam) {
            Matrix op = c.terms[n].act_of(fr.basis.row_vec(lam));
            t.act.push_back(sol.coords_cols(op * basis.transpose(), "fix term action"));
        }
        fd.term_basis.push_back(std::move(basis));
        fd.cx.terms.push_back(std::move(t));
    }
    for (std::uint32_t n = 0; n + 1 < c.length(); ++n) {
        SpanSolver sol(fd.term_basis[n + 1]);
        fd.cx.d.push_back(sol.coords_cols(c.d[n] * fd.term_basis[n].transpose(), "fix differential"));
    }
    fd.cx.provenance = hochschild::Provenance::Fix;
    hochschild::verify_complex(fd.cx);
    return fd;
}

CoinvComplexData coinv_complex(const CochainComplex& c) {
    CoinvComplexData cd;
    FixRing fr = make_fix_ring(c.terms.front().ring);
    cd.fixk = fr.ring;
    const std::uint32_t p = c.terms.front().p();
    for (std::uint32_t n = 0; n < c.length(); ++n) {
        QuotientMap qm = coinv_module(c.terms[n]);
        DiffModule t;
        t.ring = fr.ring;
        t.dim = qm.dim();
        t.sigma = Matrix::identity(qm.dim(), p);
        for (std::uint32_t lam = 0; lam < fr.ring->dim; ++lam)
            t.act.push_back(qm.induced(c.terms[n].act_of(fr.basis.row_vec(lam))));
        cd.cx.terms.push_back(std::move(t));
        cd.classes.push_back(std::move(qm));
    }
    for (std::uint32_t n = 0; n + 1 < c.length(); ++n) {
        const QuotientMap& src = cd.classes[n];
        const QuotientMap& tgt = cd.classes[n + 1];
        Matrix d(tgt.dim(), src.dim(), p);
        for (std::uint32_t j = 0; j < src.dim(); ++j) {
            Vec w = c.d[n].apply(src.lifts.row_vec(j));
            Vec cc = tgt.coords(w);
            for (std::uint32_t i = 0; i < tgt.dim(); ++i) d.set(i, j, cc[i]);
        }
        cd.cx.d.push_back(std::move(d));
    }
    cd.cx.provenance = hochschild::Provenance::Coinv;
    hochschild::verify_complex(cd.cx);
    return cd;
}

namespace {

// Cocycles/boundaries/classes at one degree of a plain matrix complex.
struct DegreeClasses {
    Subspace z;
    QuotientMap h;
};

DegreeClasses classes_at(const std::vector<std::uint32_t>& dims, const std::vector<Matrix>& d,
                         std::uint32_t n, std::uint32_t p) {
    DegreeClasses dc;
    dc.z = kernel_basis(d[n]);
    Subspace b = n ? image_basis(d[n - 1]) : Subspace::zero(dims[0], p);
    dc.h = quotient_map(dc.z, b);
    return dc;
}

void add_position(SequenceTranscript& t, const std::string& at, const Matrix& in, const Matrix& out) {
    Position pos;
    pos.at = at;
    pos.dim_mid = in.rows();
    pos.rank_in = rank(in);
    pos.rank_out = rank(out);
    pos.composite_zero = (out * in).is_zero();
    pos.exact = pos.composite_zero && pos.rank_in + pos.rank_out == pos.dim_mid;
    t.positions.push_back(pos);
    if (!pos.exact) t.exact = false;
}

}  // namespace

SequenceTranscript ses_check(const CochainComplex& c, std::uint32_t n) {
    if (n == 0 || n + 1 > c.d.size())
        throw ShapeMismatch("ses_check degree out of range");
    const std::uint32_t p = c.terms.front().p();
    SequenceTranscript t;
    t.name = "ses degree " + std::to_string(n);

    Subspace zn = kernel_basis(c.d[n]);
    Subspace bn = image_basis(c.d[n - 1]);
    diffmod::SubquotientModule hn = diffmod::subquotient_module(zn, bn, c.terms[n]);
    Subspace znm1 = kernel_basis(c.d[n - 1]);
    Subspace bnm1 = n >= 2 ? image_basis(c.d[n - 2]) : Subspace::zero(c.terms[n - 1].dim, p);
    diffmod::SubquotientModule hnm1 = diffmod::subquotient_module(znm1, bnm1, c.terms[n - 1]);

    Subspace fix_hn = fix_module(hn.module);
    QuotientMap coinv_hnm1 = coinv_module(hnm1.module);

    HyperComplex hc = cone(c);
    DegreeClasses cone_n = classes_at(hc.dims, hc.d, n, p);

    // alpha : coinv H^{n-1} -> H^n(cone), [z] -> [(0, -z)]
    Matrix alpha(cone_n.h.dim(), coinv_hnm1.dim(), p);
    for (std::uint32_t j = 0; j < coinv_hnm1.dim(); ++j) {
        Vec hcoords = coinv_hnm1.lifts.row_vec(j);
        Vec ambient = hnm1.classes.lifts.apply_t(hcoords);  // rep in C^{n-1}
        Vec cone_vec = concat(Vec(c.terms[n].dim, 0), linfp::vec_scale(ambient, p - 1, p));
        Vec cls = cone_n.h.coords(cone_vec);
        for (std::uint32_t i = 0; i < cone_n.h.dim(); ++i) alpha.set(i, j, cls[i]);
    }

    // beta : H^n(cone) -> fix H^n, [(x,y)] -> [x]
    SpanSolver fix_sol(fix_hn.basis.rows() ? fix_hn.basis : Matrix(0, hn.module.dim, p));
    Matrix beta(fix_hn.dim(), cone_n.h.dim(), p);
    for (std::uint32_t j = 0; j < cone_n.h.dim(); ++j) {
        Vec lift = cone_n.h.lifts.row_vec(j);
        Vec x(lift.begin(), lift.begin() + c.terms[n].dim);
        Vec cls = hn.classes.coords(x);
        Vec fc = fix_sol.coords_or_throw(cls, "ses beta: class not sigma-fixed");
        for (std::uint32_t i = 0; i < fix_hn.dim(); ++i) beta.set(i, j, fc[i]);
    }

    add_position(t, "cone H^" + std::to_string(n), alpha, beta);
    bool alpha_inj = rank(alpha) == coinv_hnm1.dim();
    bool beta_surj = rank(beta) == fix_hn.dim();
    bool dims_id = cone_n.h.dim() == coinv_hnm1.dim() + fix_hn.dim();
    if (!(alpha_inj && beta_surj && dims_id)) t.exact = false;

    t.dims_labels = {"coinv H^{n-1}", "cone H^n", "fix H^n"};
    t.dims_rows = {{coinv_hnm1.dim()}, {cone_n.h.dim()}, {fix_hn.dim()}};
    return t;
}

SequenceTranscript les_check(const CochainComplex& c) {
    const std::uint32_t p = c.terms.front().p();
    const std::uint32_t tmax = static_cast<std::uint32_t>(c.d.size());  // degrees 0..tmax-1 analyzable
    SequenceTranscript t;
    t.name = "les";

    FixComplexData fx = fix_complex(c);
    CoinvComplexData cv = coinv_complex(c);
    HyperComplex hc = cone(c);

    std::vector<DegreeClasses> hf, hq, hh;
    std::vector<std::uint32_t> fdims, qdims;
    for (std::uint32_t n = 0; n < c.length(); ++n) {
        fdims.push_back(fx.cx.terms[n].dim);
        qdims.push_back(cv.cx.terms[n].dim);
    }
    for (std::uint32_t n = 0; n < tmax; ++n) {
        hf.push_back(classes_at(fdims, fx.cx.d, n, p));
        hq.push_back(classes_at(qdims, cv.cx.d, n, p));
        hh.push_back(classes_at(hc.dims, hc.d, n, p));
    }

    // iota_n : H^n(fix) -> H^n(cone), [w] -> [(w, 0)]
    auto iota = [&](std::uint32_t n) {
        Matrix m(hh[n].h.dim(), hf[n].h.dim(), p);
        for (std::uint32_t j = 0; j < hf[n].h.dim(); ++j) {
            Vec w_f = hf[n].h.lifts.row_vec(j);                 // in fix-term coords
            Vec w = fx.term_basis[n].apply_t(w_f);              // in C^n coords
            Vec cone_vec = concat(w, Vec(n ? c.terms[n - 1].dim : 0, 0));
            Vec cls = hh[n].h.coords(cone_vec);
            for (std::uint32_t i = 0; i < m.rows(); ++i) m.set(i, j, cls[i]);
        }
        return m;
    };
    // pi_n : H^n(cone) -> H^{n-1}(coinv), [(x,y)] -> [y mod im(sigma-1)]
    auto pi = [&](std::uint32_t n) {
        Matrix m(n ? hq[n - 1].h.dim() : 0, hh[n].h.dim(), p);
        if (!n) return m;
        for (std::uint32_t j = 0; j < hh[n].h.dim(); ++j) {
            Vec lift = hh[n].h.lifts.row_vec(j);
            Vec y(lift.begin() + c.terms[n].dim, lift.end());
            Vec ybar = cv.classes[n - 1].coords(y);
            Vec cls = hq[n - 1].h.coords(ybar);
            for (std::uint32_t i = 0; i < m.rows(); ++i) m.set(i, j, cls[i]);
        }
        return m;
    };
    // conn_n : H^{n-1}(coinv) -> H^{n+1}(fix), [zbar] -> [du] with dz = (sigma-1)u
    auto conn = [&](std::uint32_t n) {
        Matrix m(hf[n + 1].h.dim(), n ? hq[n - 1].h.dim() : 0, p);
        if (!n) return m;
        Matrix sm1 = sigma_minus_one(c.terms[n]);
        SpanSolver fix_sol(fx.term_basis[n + 1]);
        for (std::uint32_t j = 0; j < hq[n - 1].h.dim(); ++j) {
            Vec zbar = hq[n - 1].h.lifts.row_vec(j);            // coinv-term coords
            Vec z = cv.classes[n - 1].lifts.apply_t(zbar);      // rep in C^{n-1}
            Vec dz = c.d[n - 1].apply(z);
            auto u = solve(sm1, dz);
            if (!u) throw LiftFailure("les connecting map: dz not in im(sigma - 1)");
            Vec du = c.d[n].apply(*u);
            Vec du_f = fix_sol.coords_or_throw(du, "les connecting map: du not sigma-fixed");
            Vec cls = hf[n + 1].h.coords(du_f);
            for (std::uint32_t i = 0; i < m.rows(); ++i) m.set(i, j, cls[i]);
        }
        return m;
    };

    std::vector<Matrix> iotas, pis, conns;
    for (std::uint32_t n = 0; n < tmax; ++n) {
        iotas.push_back(iota(n));
        pis.push_back(pi(n));
        if (n + 1 < tmax) conns.push_back(conn(n));
    }

    // Head: 0 -> H^0(fix) -> cone H^0.
    {
        Position pos;
        pos.at = "fix H^0";
        pos.dim_mid = hf[0].h.dim();
        pos.rank_in = 0;
        pos.rank_out = rank(iotas[0]);
        pos.composite_zero = true;
        pos.exact = pos.rank_out == pos.dim_mid;
        t.positions.push_back(pos);
        if (!pos.exact) t.exact = false;
    }
    for (std::uint32_t n = 0; n < tmax; ++n) {
        add_position(t, "cone H^" + std::to_string(n), iotas[n], pis[n]);
        if (n + 1 < tmax && n >= 1)
            add_position(t, "coinv H^" + std::to_string(n - 1), pis[n], conns[n]);
        if (n + 1 < tmax)
            add_position(t, "fix H^" + std::to_string(n + 1), conns[n], iotas[n + 1]);
    }

    t.dims_labels = {"fix", "cone", "coinv"};
    std::vector<std::uint32_t> frow, crow, qrow;
    for (std::uint32_t n = 0; n < tmax; ++n) {
        frow.push_back(hf[n].h.dim());
        crow.push_back(hh[n].h.dim());
        qrow.push_back(hq[n].h.dim());
    }
    t.dims_rows = {frow, crow, qrow};
    return t;
}

SplitCheck split_check_identity_sigma(const CochainComplex& c) {
    SplitCheck sc;
    for (const auto& term : c.terms)
        if (!term.sigma.is_identity()) return sc;
    sc.applies = true;
    sc.pass = true;
    const std::uint32_t p = c.terms.front().p();
    HyperComplex hc = cone(c);
    for (std::uint32_t n = 0; n < c.d.size(); ++n) {
        DegreeClasses cone_n = classes_at(hc.dims, hc.d, n, p);
        Subspace zn = kernel_basis(c.d[n]);
        Subspace bn = n ? image_basis(c.d[n - 1]) : Subspace::zero(c.terms[n].dim, p);
        QuotientMap hn = quotient_map(zn, bn);
        std::uint32_t hprev_dim = 0;
        Matrix joint(cone_n.h.dim(), 0, p);
        {
            Matrix m(cone_n.h.dim(), hn.dim(), p);
            for (std::uint32_t j = 0; j < hn.dim(); ++j) {
                Vec cls = cone_n.h.coords(concat(hn.lifts.row_vec(j), Vec(n ? c.terms[n - 1].dim : 0, 0)));
                for (std::uint32_t i = 0; i < m.rows(); ++i) m.set(i, j, cls[i]);
            }
            joint = m;
        }
        if (n) {
            Subspace znm1 = kernel_basis(c.d[n - 1]);
            Subspace bnm1 = n >= 2 ? image_basis(c.d[n - 2]) : Subspace::zero(c.terms[n - 1].dim, p);
            QuotientMap hm = quotient_map(znm1, bnm1);
            hprev_dim = hm.dim();
            Matrix m(cone_n.h.dim(), hm.dim(), p);
            for (std::uint32_t j = 0; j < hm.dim(); ++j) {
                Vec cls = cone_n.h.coords(concat(Vec(c.terms[n].dim, 0), hm.lifts.row_vec(j)));
                for (std::uint32_t i = 0; i < m.rows(); ++i) m.set(i, j, cls[i]);
            }
            joint = joint.hstack(m);
        }
        if (cone_n.h.dim() != hn.dim() + hprev_dim || rank(joint) != cone_n.h.dim()) sc.pass = false;
    }
    return sc;
}

AbsoluteHH absolute_hh(DiffAlgebraPtr a, const Bimodule& m, std::uint32_t max_degree,
                       std::uint64_t dim_cap) {
    hochschild::HochschildData hd = hochschild::hochschild_complex(a, m, max_degree, dim_cap);
    AbsoluteHH out;
    hochschild::CohomologyReport hh = hochschild::cohomology(hd.complex);
    out.internal_dims = hh.dims();
    for (const auto& deg : hh.degrees) {
        out.fix_of_h.push_back(deg.fix_dim);
        out.coinv_of_h.push_back(deg.coinv_dim);
    }
    FixComplexData fx = fix_complex(hd.complex);
    hochschild::CohomologyReport fixhh = hochschild::cohomology(fx.cx);
    out.fix_dims = fixhh.dims();
    CoinvComplexData cv = coinv_complex(hd.complex);
    out.coinv_dims = hochschild::cohomology(cv.cx).dims();
    out.hyper = hyper_dims(hd.complex);
    for (std::uint32_t n = 1; n <= max_degree; ++n) {
        out.ses.push_back(ses_check(hd.complex, n));
        if (!out.ses.back().exact) out.all_exact = false;
    }
    out.les = les_check(hd.complex);
    if (!out.les.exact) out.all_exact = false;
    return out;
}

}  // namespace dhh::spectral
