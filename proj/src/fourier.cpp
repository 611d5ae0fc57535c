#include "cocycle/fourier.hpp"

#include "cocycle/error.hpp"

namespace cocycle {

CMatrix transform_block(const GroupFunction& f, const UnitaryRep& rep) {
    require_same_group(f.group, rep.group(), "transform");
    const std::size_t n = f.size(), d = rep.dim();
    CMatrix block(d, d);
    for (Element x = 0; x < n; ++x) {
        const Complex fx = f[x];
        if (fx == Complex{}) continue;
        const CMatrix& m = rep(x);
        // f(x)·π(x)†
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) block(i, j) += fx * std::conj(m(j, i));
    }
    block *= static_cast<double>(d) / static_cast<double>(n);
    return block;
}

FourierCoefficients transform(const GroupFunction& f, const IrrepBasis& basis) {
    require_same_group(f.group, basis.group, "transform");
    FourierCoefficients out{&basis, {}};
    out.blocks.reserve(basis.size());
    for (const auto& rep : basis.irreps) out.blocks.push_back(transform_block(f, rep));
    return out;
}

GroupFunction inverse(const FourierCoefficients& coeffs) {
    if (coeffs.basis == nullptr) throw ValidationError("inverse: coefficients carry no basis");
    const IrrepBasis& basis = *coeffs.basis;
    if (coeffs.blocks.size() != basis.size())
        throw ValidationError("inverse: expected " + std::to_string(basis.size()) + " blocks, got " +
                              std::to_string(coeffs.blocks.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const std::size_t d = basis[k].dim();
        if (coeffs.blocks[k].rows() != d || coeffs.blocks[k].cols() != d)
            throw WrongDimension("inverse: block " + std::to_string(k) + " must be " +
                                 std::to_string(d) + "x" + std::to_string(d));
    }
    GroupFunction f = GroupFunction::zeros(basis.group);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const CMatrix& b = coeffs.blocks[k];
        const UnitaryRep& rep = basis[k];
        const std::size_t d = rep.dim();
        for (Element x = 0; x < f.size(); ++x) {
            // tr(B·π(x)) = Σ_ij B_ij π(x)_ji
            Complex s = 0.0;
            const CMatrix& m = rep(x);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) s += b(i, j) * m(j, i);
            f[x] += s;
        }
    }
    return f;
}

GroupFunction translate(const GroupFunction& f, Element y, Side side) {
    const Group& g = *f.group;
    if (y >= g.order()) throw ValidationError("translate: element out of range");
    GroupFunction out = f;
    for (Element x = 0; x < g.order(); ++x) {
        out[x] = side == Side::left ? f[g.mul(g.inv(y), x)] : f[g.mul(x, y)];
    }
    return out;
}

}  // namespace cocycle
