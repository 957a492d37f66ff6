// Lists LR(Y,W)^Z for Y=(5,2,1), W=(3,2,2,1), Z=(6,4,2,2,2) and the gl(5)
// tableau each one corresponds to.
#include <iostream>

#include "lrpic/io.hpp"
#include "lrpic/lrpic.hpp"

int main() {
    using namespace lrpic;
    const Partition y{5, 2, 1}, w{3, 2, 2, 1}, z{6, 4, 2, 2, 2};
    const SkewShape zy(z, y);

    auto coeff = lr_coefficient(y, w, z, 3, 3);
    std::cout << "c = " << coeff.c << ", N = " << coeff.n_super << ", r = " << coeff.r << "\n\n";

    for (const auto& q : enumerate_LR(y, w, z, middle_eastern(zy))) {
        Tableau t = phi_hat(q, middle_eastern(zy), middle_eastern(SkewShape(w)));
        std::cout << io::render(q, io::RenderMode::ascii) << "  maps to\n"
                  << io::render(t, io::RenderMode::ascii) << '\n';
    }
}
