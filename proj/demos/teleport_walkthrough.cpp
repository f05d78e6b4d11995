// Enumerates the four teleportation branches for one input state and then
// samples the protocol with a fixed seed.

#include <cstdio>

#include "quditkit/quditkit.hpp"

int main() {
    using namespace quditkit;

    const double theta = 1.047, phi = 0.524;
    const Ket input = hopf_ket(theta, phi);
    std::printf("teleporting hopf(theta=%.3f, phi=%.3f)\n\n", theta, phi);

    for (const TeleportOutcome& out : teleport_enumerate(input))
        std::printf("branch %d%d  p=%.4f  correction=%-2s  fidelity=%.12f\n", out.branch[0],
                    out.branch[1], out.probability, out.correction.c_str(), out.fidelity);

    const TeleportTally tally = teleport_sample(input, 2024, 100000);
    std::printf("\n%llu shots, seed 2024:", static_cast<unsigned long long>(tally.shots));
    for (int b = 0; b < 4; ++b)
        std::printf("  %d%d: %llu", b / 2, b % 2, static_cast<unsigned long long>(tally.counts[b]));
    std::printf("\n");

    const DensityOp bob = bob_premeasure_reduced(input);
    std::printf("bob premeasurement reduced state: [[%.3f, %.3f], [%.3f, %.3f]]\n",
                bob.matrix()(0, 0).real(), bob.matrix()(0, 1).real(), bob.matrix()(1, 0).real(),
                bob.matrix()(1, 1).real());
    return 0;
}
