#include "teichlab/quad_diff.hpp"

#include <cmath>

namespace teichlab {

namespace {

bool in_closed_disk(cxd z) { return std::abs(z) <= 1.0 + 1e-12; }
bool in_closed_exterior(cxd z) { return std::abs(z) >= 1.0 - 1e-12; }

}  // namespace

QuadDiff::QuadDiff(PlanarDomain domain, std::vector<QuadDiffTerm> terms)
    : domain_(domain), terms_(std::move(terms)) {
    using Kind = QuadDiffTerm::Kind;
    auto note_pole = [&](cxd p) {
        const bool relevant = domain_ == PlanarDomain::Disk ? in_closed_disk(p)
                                                            : in_closed_exterior(p);
        if (!relevant) return;
        for (const auto& q : poles_)
            if (std::abs(q - p) < 1e-14) return;
        poles_.push_back(p);
    };
    for (const auto& t : terms_) {
        switch (t.kind) {
            case Kind::Monomial:
                if (domain_ == PlanarDomain::Disk) {
                    if (t.p < -1)
                        throw std::invalid_argument(
                            "quad_diff: monomial pole of order >= 2 at 0 is not integrable on the disk");
                    if (t.p == -1) note_pole(0.0);
                } else {
                    if (t.p > -3)
                        throw std::invalid_argument(
                            "quad_diff: monomial decays too slowly for the exterior domain");
                    note_pole(0.0);  // image of infinity under inversion
                }
                break;
            case Kind::Rho:
                if (domain_ == PlanarDomain::Exterior)
                    throw std::invalid_argument(
                        "quad_diff: rho kernels are not integrable on the exterior domain");
                if (!t.e_infinite && std::abs(t.e - 1.0) < 1e-14)
                    throw std::invalid_argument("quad_diff: rho kernel degenerates at e = 1");
                note_pole(1.0);
                if (!t.e_infinite) note_pole(t.e);
                break;
            case Kind::SimplePole:
                if (domain_ == PlanarDomain::Exterior)
                    throw std::invalid_argument(
                        "quad_diff: a lone simple pole is not integrable on the exterior domain");
                note_pole(t.e);
                break;
            case Kind::HigherPole:
                if (t.order < 2)
                    throw std::invalid_argument("quad_diff: higher pole order must be >= 2");
                if (domain_ == PlanarDomain::Disk) {
                    if (std::abs(t.e) <= 1.0 + 1e-12)
                        throw std::invalid_argument(
                            "quad_diff: pole of order >= 2 inside the closed disk is not integrable");
                } else {
                    if (t.order < 3 || std::abs(t.e) >= 1.0 - 1e-12)
                        throw std::invalid_argument(
                            "quad_diff: exterior pole term must have order >= 3 and |e| < 1");
                }
                break;
        }
    }
}

cxd QuadDiff::eval(cxd z) const {
    using Kind = QuadDiffTerm::Kind;
    cxd s = 0.0;
    for (const auto& t : terms_) {
        switch (t.kind) {
            case Kind::Monomial:
                s += t.c * pow_int(z, t.p);
                break;
            case Kind::Rho:
                if (t.e_infinite)
                    s += -t.c / (z - 1.0);
                else
                    s += t.c * (t.e - 1.0) / ((z - 1.0) * (z - t.e));
                break;
            case Kind::SimplePole:
                s += t.c / (z - t.e);
                break;
            case Kind::HigherPole:
                s += t.c / pow_int(z - t.e, t.order);
                break;
        }
    }
    return s;
}

bool QuadDiff::is_zero() const {
    for (const auto& t : terms_)
        if (t.c != 0.0) return false;
    return true;
}

QuadDiff QuadDiff::scaled(cxd s) const {
    std::vector<QuadDiffTerm> ts = terms_;
    for (auto& t : ts) t.c *= s;
    return QuadDiff(domain_, std::move(ts));
}

QuadDiff operator+(const QuadDiff& a, const QuadDiff& b) {
    if (a.domain() != b.domain())
        throw std::invalid_argument("quad_diff: domain mismatch in sum");
    std::vector<QuadDiffTerm> ts = a.terms();
    ts.insert(ts.end(), b.terms().begin(), b.terms().end());
    return QuadDiff(a.domain(), std::move(ts));
}

QuadDiff rho_element(cxd e) {
    QuadDiffTerm t;
    t.kind = QuadDiffTerm::Kind::Rho;
    t.c = 1.0;
    if (std::isfinite(e.real()) && std::isfinite(e.imag())) {
        t.e = e;
    } else {
        t.e_infinite = true;
    }
    return QuadDiff(PlanarDomain::Disk, {t});
}

QuadDiff a1sq_from_vector(const std::vector<cxd>& x) {
    const int B = int(x.size());
    if (B == 0) return QuadDiff::zero(PlanarDomain::Disk);
    std::vector<cxd> coef(2 * B - 1, cxd(0.0));  // power m+n-2 in 0..2B-2
    for (int m = 1; m <= B; ++m)
        for (int n = 1; n <= B; ++n)
            coef[m + n - 2] += std::sqrt(double(m) * double(n)) * x[m - 1] * x[n - 1] / pi;
    std::vector<QuadDiffTerm> ts;
    for (int p = 0; p < int(coef.size()); ++p) {
        if (coef[p] == 0.0) continue;
        QuadDiffTerm t;
        t.kind = QuadDiffTerm::Kind::Monomial;
        t.c = coef[p];
        t.p = p;
        ts.push_back(t);
    }
    return QuadDiff(PlanarDomain::Disk, std::move(ts));
}

BeltramiField BeltramiField::teichmuller(const QuadDiff& psi, double k) {
    if (psi.is_zero())
        throw std::invalid_argument("teich_beltrami: psi is identically zero");
    if (k < 0.0 || k >= 1.0)
        throw std::invalid_argument("teich_beltrami: k must be in [0,1)");
    BeltramiField f;
    f.is_grid_ = false;
    f.form_ = psi;
    f.k_ = k;
    f.sup_norm_ = k;
    return f;
}

BeltramiField BeltramiField::grid(GridSpec spec, std::vector<cxd> samples) {
    if (spec.n <= 0 || spec.half_width <= 0.0)
        throw std::invalid_argument("beltrami_field: bad grid spec");
    if (samples.size() != std::size_t(spec.n) * std::size_t(spec.n))
        throw std::invalid_argument("beltrami_field: sample count does not match grid");
    BeltramiField f;
    f.is_grid_ = true;
    f.spec_ = spec;
    double sup = 0.0;
    for (const auto& s : samples) sup = std::max(sup, std::abs(s));
    if (sup >= 1.0)
        throw std::invalid_argument("beltrami_field: sup norm must be < 1");
    f.sup_norm_ = sup;
    f.samples_ = std::move(samples);
    return f;
}

cxd BeltramiField::value(cxd z) const {
    if (is_grid_) {
        const double h = spec_.spacing();
        const int ix = int(std::floor((z.real() + spec_.half_width) / h));
        const int iy = int(std::floor((z.imag() + spec_.half_width) / h));
        if (ix < 0 || iy < 0 || ix >= spec_.n || iy >= spec_.n) return 0.0;
        return samples_[spec_.index(ix, iy)];
    }
    const cxd w = form_.eval(z);
    if (w == 0.0 || !std::isfinite(w.real()) || !std::isfinite(w.imag())) return 0.0;
    return k_ * std::abs(w) / w;
}

const GridSpec& BeltramiField::grid_spec() const {
    if (!is_grid_) throw std::logic_error("beltrami_field: not a grid field");
    return spec_;
}

const std::vector<cxd>& BeltramiField::samples() const {
    if (!is_grid_) throw std::logic_error("beltrami_field: not a grid field");
    return samples_;
}

const QuadDiff& BeltramiField::form() const {
    if (is_grid_) throw std::logic_error("beltrami_field: not a closed-form field");
    return form_;
}

double BeltramiField::teich_k() const {
    if (is_grid_) throw std::logic_error("beltrami_field: not a closed-form field");
    return k_;
}

}  // namespace teichlab
