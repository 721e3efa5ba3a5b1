#include "pvc/polyvector.hpp"

namespace pvc {

PolyVector wedge(const PolyVector& u, const PolyVector& v) {
    PolyVector r;
    for (int a = 0; a < kBladeCount; ++a) {
        const Poly& pa = u.component(static_cast<Blade>(a));
        if (pa.is_zero()) continue;
        for (int b = 0; b < kBladeCount; ++b) {
            const Poly& pb = v.component(static_cast<Blade>(b));
            if (pb.is_zero()) continue;
            int ma = blade_mask(static_cast<Blade>(a));
            int mb = blade_mask(static_cast<Blade>(b));
            int sign = blade_product_sign(ma, mb);
            if (sign == 0) continue;
            Blade target = blade_from_mask(ma | mb);
            Poly term = pa * pb;
            if (sign < 0) term = -term;
            r.set_component(target, r.component(target) + term);
        }
    }
    return r;
}

} // namespace pvc
