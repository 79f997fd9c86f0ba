#pragma once

#include <vector>

#include "teichlab/types.hpp"

namespace teichlab {

enum class PlanarDomain { Disk, Exterior };

// One additive term of a rational-plus-polynomial quadratic differential.
struct QuadDiffTerm {
    enum class Kind {
        Monomial,    // c z^p
        Rho,         // c (e-1)/((z-1)(z-e)); e at infinity degenerates to -c/(z-1)
        SimplePole,  // c / (z-e)
        HigherPole,  // c / (z-e)^order, order >= 2
    };
    Kind kind = Kind::Monomial;
    cxd c = 0.0;
    int p = 0;
    cxd e = 0.0;
    bool e_infinite = false;
    int order = 1;
};

// An integrable holomorphic quadratic differential on the declared domain.
// Integrability (all poles simple or decaying fast enough at infinity) is
// checked at construction; the list of singular points in the closure of the
// domain is recorded for quadrature refinement.
class QuadDiff {
  public:
    QuadDiff(PlanarDomain domain, std::vector<QuadDiffTerm> terms);

    static QuadDiff zero(PlanarDomain d) { return QuadDiff(d, {}); }
    static QuadDiff monomial(PlanarDomain d, cxd c, int p) {
        QuadDiffTerm t;
        t.kind = QuadDiffTerm::Kind::Monomial;
        t.c = c;
        t.p = p;
        return QuadDiff(d, {t});
    }

    cxd eval(cxd z) const;
    PlanarDomain domain() const { return domain_; }
    const std::vector<QuadDiffTerm>& terms() const { return terms_; }
    const std::vector<cxd>& poles() const { return poles_; }
    bool is_zero() const;
    QuadDiff scaled(cxd s) const;

  private:
    PlanarDomain domain_;
    std::vector<QuadDiffTerm> terms_;
    std::vector<cxd> poles_;
};

// Sum on a common domain (term lists concatenate).
QuadDiff operator+(const QuadDiff& a, const QuadDiff& b);

// (e-1)/((z-1)(z-e)) on the disk; a non-finite e yields the limit -1/(z-1).
QuadDiff rho_element(cxd e);

// psi(z) = (1/pi) sum_{m,n} sqrt(mn) x_m x_n z^{m+n-2}, the square of the
// polynomial (1/sqrt(pi)) sum sqrt(m) x_m z^{m-1}.
QuadDiff a1sq_from_vector(const std::vector<cxd>& x);

// Square-lattice sample grid over the box [-half_width, half_width]^2.
struct GridSpec {
    double half_width = 0.0;
    int n = 0;

    double spacing() const { return 2.0 * half_width / n; }
    cxd center(int ix, int iy) const {
        const double h = spacing();
        return {-half_width + (ix + 0.5) * h, -half_width + (iy + 0.5) * h};
    }
    std::size_t index(int ix, int iy) const {
        return std::size_t(iy) * std::size_t(n) + std::size_t(ix);
    }
};

// A Beltrami coefficient: either the closed form k|psi|/psi over a quadratic
// differential, or cell samples on a square lattice.  sup norm < 1 always.
class BeltramiField {
  public:
    static BeltramiField teichmuller(const QuadDiff& psi, double k);
    static BeltramiField grid(GridSpec spec, std::vector<cxd> samples);

    bool is_grid() const { return is_grid_; }
    double sup_norm() const { return sup_norm_; }

    // Closed form: k|psi(z)|/psi(z), 0 on the zero set.  Grid: the sample of
    // the containing cell, 0 outside the box.
    cxd value(cxd z) const;

    const GridSpec& grid_spec() const;
    const std::vector<cxd>& samples() const;
    const QuadDiff& form() const;
    double teich_k() const;

  private:
    BeltramiField() : form_(QuadDiff::zero(PlanarDomain::Disk)) {}

    bool is_grid_ = false;
    double sup_norm_ = 0.0;
    // closed form
    QuadDiff form_;
    double k_ = 0.0;
    // grid
    GridSpec spec_;
    std::vector<cxd> samples_;
};

// Spec-facing name for the closed-form construction.
inline BeltramiField teich_beltrami(const QuadDiff& psi, double k) {
    return BeltramiField::teichmuller(psi, k);
}

}  // namespace teichlab
