#include "brauer/matrix.hpp"

namespace brauer {

ExactMatrix<PolyQ> clear_denominators(const ExactMatrix<RatFunc>& m, std::vector<PolyQ>* row_scale)
{
    ExactMatrix<PolyQ> out(m.rows(), m.cols());
    if (row_scale) row_scale->assign(m.rows(), PolyQ(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        PolyQ l(1);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const PolyQ& d = m(i, j).den();
            if (d == PolyQ(1)) continue;
            PolyQ g = poly_gcd(l, d);
            l = div_exact(l * d, g);
        }
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).num() * div_exact(l, m(i, j).den());
        if (row_scale) (*row_scale)[i] = l;
    }
    return out;
}

std::size_t matrix_rank(const ExactMatrix<RatFunc>& m)
{
    return matrix_rank(clear_denominators(m));
}

RatFunc matrix_det(const ExactMatrix<RatFunc>& m)
{
    std::vector<PolyQ> scale;
    PolyQ d = matrix_det(clear_denominators(m, &scale));
    PolyQ s(1);
    for (auto& x : scale) s *= x;
    return RatFunc(d, s);
}

}  // namespace brauer
