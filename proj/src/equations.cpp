#include "cocycle/equations.hpp"

#include <cmath>

#include "cocycle/error.hpp"

namespace cocycle {

const char* to_string(Equation e) {
    switch (e) {
        case Equation::dalembert: return "dalembert";
        case Equation::wilson: return "wilson";
        case Equation::long_form: return "long";
    }
    return "?";
}

Equation parse_equation(const std::string& name) {
    if (name == "dalembert") return Equation::dalembert;
    if (name == "wilson") return Equation::wilson;
    if (name == "long") return Equation::long_form;
    throw ValidationError("unknown equation '" + name + "' (expected dalembert|wilson|long)");
}

namespace {

template <class Residual>
ResidualReport scan_pairs(std::size_t n, double tol, Residual&& residual) {
    ResidualReport r;
    r.tol = tol;
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            const double v = residual(x, y);
            if (v > r.max_residual) {
                r.max_residual = v;
                r.argmax = {x, y};
            }
        }
    }
    r.satisfied = r.max_residual <= tol;
    return r;
}

template <class Residual>
ResidualReport scan_single(std::size_t n, double tol, Residual&& residual) {
    ResidualReport r;
    r.tol = tol;
    for (Element y = 0; y < n; ++y) {
        const double v = residual(y);
        if (v > r.max_residual) {
            r.max_residual = v;
            r.argmax = {y, y};
        }
    }
    r.satisfied = r.max_residual <= tol;
    return r;
}

}  // namespace

ResidualReport dalembert_residual(const GroupFunction& f, double tol) {
    const Group& g = *f.group;
    return scan_pairs(g.order(), tol, [&](Element x, Element y) {
        return std::abs(f[g.mul(x, y)] + f[g.mul(x, g.inv(y))] - 2.0 * f[x] * f[y]);
    });
}

ResidualReport wilson_residual(const GroupFunction& f, const GroupFunction& h, double tol) {
    require_same_group(f.group, h.group, "wilson_residual");
    const Group& g = *f.group;
    return scan_pairs(g.order(), tol, [&](Element x, Element y) {
        return std::abs(f[g.mul(x, y)] + f[g.mul(x, g.inv(y))] - 2.0 * f[x] * h[y]);
    });
}

ResidualReport long_residual(const GroupFunction& f, double tol) {
    const Group& g = *f.group;
    return scan_pairs(g.order(), tol, [&](Element x, Element y) {
        const Element yi = g.inv(y);
        return std::abs(f[g.mul(x, y)] + f[g.mul(y, x)] + f[g.mul(x, yi)] + f[g.mul(yi, x)] -
                        4.0 * f[x] * f[y]);
    });
}

bool is_central(const GroupFunction& f, double tol) {
    const Group& g = *f.group;
    return scan_pairs(g.order(), tol, [&](Element x, Element y) {
               return std::abs(f[g.mul(x, y)] - f[g.mul(y, x)]);
           })
        .satisfied;
}

ResidualReport check_square_identity(const GroupFunction& f, double tol) {
    const Group& g = *f.group;
    return scan_single(g.order(), tol, [&](Element y) {
        return std::abs(2.0 * f[y] * f[y] - f[g.mul(y, y)] - 1.0);
    });
}

namespace {

GroupFunction real_or_throw(const GroupFunction& f, double tol, bool* projected) {
    const double im = f.max_imag();
    if (im > tol) {
        throw NotRealValued("imaginary part " + std::to_string(im) + " exceeds tolerance");
    }
    if (projected) *projected = im > 0.0;
    return f.real_part();
}

CMatrix delta_real(const UnitaryRep& rep, const GroupFunction& fr, Element y) {
    CMatrix d = rep(y) + rep.inverse_at(y);
    const double two_f = 2.0 * fr[y].real();
    for (std::size_t i = 0; i < rep.dim(); ++i) d(i, i) -= two_f;
    return d;
}

}  // namespace

CMatrix delta_operator(const UnitaryRep& rep, const GroupFunction& f, Element y, double tol) {
    require_same_group(rep.group(), f.group, "delta_operator");
    return delta_real(rep, real_or_throw(f, tol, nullptr), y);
}

ResidualReport verify_delta_square(const UnitaryRep& rep, const GroupFunction& f, double tol) {
    require_same_group(rep.group(), f.group, "verify_delta_square");
    const ResidualReport sq = check_square_identity(f, tol);
    if (!sq.satisfied) {
        throw SquareIdentityFails("2f(y)^2 = f(y^2) + 1 fails by " +
                                  std::to_string(sq.max_residual) + " at y = " +
                                  std::to_string(sq.argmax.first));
    }
    bool projected = false;
    const GroupFunction fr = real_or_throw(f, tol, &projected);
    const Group& g = *f.group;
    ResidualReport r = scan_single(g.order(), tol, [&](Element y) {
        const CMatrix d = delta_real(rep, fr, y);
        const CMatrix lhs = d * d;
        const CMatrix rhs = delta_real(rep, fr, g.mul(y, y)) - (4.0 * fr[y].real()) * d;
        return frobenius_distance(lhs, rhs);
    });
    r.projected_to_real = projected;
    return r;
}

AnnihilationReport annihilation_chain(const UnitaryRep& rep, const GroupFunction& f,
                                      const CMatrix& fourier_block, double tol) {
    require_same_group(rep.group(), f.group, "annihilation_chain");
    const GroupFunction fr = real_or_throw(f, tol, nullptr);
    AnnihilationReport out;
    for (Element y = 0; y < f.size(); ++y) {
        const CMatrix d = delta_real(rep, fr, y);
        const CMatrix db = d * fourier_block;
        out.anticommutator =
            std::max(out.anticommutator, (db + fourier_block * d).frobenius_norm());
        out.square_kills = std::max(out.square_kills, (d * db).frobenius_norm());
        out.delta_kills = std::max(out.delta_kills, db.frobenius_norm());
        out.self_adjointness = std::max(out.self_adjointness, frobenius_distance(d, d.adjoint()));
    }
    return out;
}

}  // namespace cocycle
