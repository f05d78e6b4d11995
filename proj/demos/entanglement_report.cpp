// Walks the Werner family and prints the quantities that flip between the
// separable and entangled regimes.

#include <cstdio>

#include "quditkit/quditkit.hpp"

int main() {
    using namespace quditkit;

    std::printf("%8s %12s %14s %12s  %s\n", "x", "chsh", "ppt min eig", "concurrence", "verdict");
    for (const ChshScanRow& row : chsh_scan(-0.25, 1.0, 0.125)) {
        const PptResult ppt = ppt_test(werner(row.x));
        std::printf("%8.3f %12.6f %14.6f %12.6f  %s\n", row.x, row.chsh, row.ppt_min_eig,
                    row.concurrence, to_string(ppt.verdict));
    }

    const DensityOp bell_rho = dm_from_ket(bell(BellKind::phi_plus));
    std::printf("\nbell(phi+): purity %.3f, entanglement entropy %.3f, concurrence %.3f\n",
                purity(bell_rho), entanglement_entropy(bell_rho, 0), concurrence(bell_rho));
    return 0;
}
