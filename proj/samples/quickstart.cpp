// Build R = ab(x)1 + 1(x)ab - b(x)a on the dual numbers and check it.
#include <ybforge/ybforge.hpp>

#include <iostream>

int main()
{
    using namespace ybforge;
    const AlgebraSpec a = dual2();
    const LinOp2 r = r_algebra(a, 1, 1, 1);
    const YbReport rep = is_yb_operator(r);
    std::cout << "braid " << rep.braid << "  invertible " << rep.invertible << "  yb " << rep.yb << '\n';
    std::cout << to_json(r).dump(2) << '\n';

    const GridVerdict v = colored_qybe_verify(r_colored(mat2(), 1, 2), integer_grid(0, 4));
    std::cout << "colored QYBE on mat2: " << v.verdict << (v.certified ? " (certified)" : "") << '\n';
}
