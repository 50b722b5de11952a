#include "pomine/evidence.hpp"

#include <cmath>

#include "pomine/errors.hpp"

namespace pomine {

double pair_evidence(uint64_t f_ij, uint64_t f_ji) {
    uint64_t m = f_ij + f_ji;
    if (m == 0) return 1.0;
    if (f_ij == 0 || f_ji == 0) return 0.0;
    double p = double(f_ij) / double(m);
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

EvidenceReport bidirectional_evidence(const Episode& ep, const CountResult& res) {
    const int l = ep.size();
    if (res.fij.size() != size_t(l) * l)
        throw ValidationError("count result does not match episode size");
    EvidenceReport rep;
    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
            if (ep.related(i, j) || ep.related(j, i)) continue;
            PairEvidence pe;
            pe.i = i;
            pe.j = j;
            pe.f_ij = res.fij[size_t(i) * l + j];
            pe.f_ji = res.fij[size_t(j) * l + i];
            uint64_t m = pe.f_ij + pe.f_ji;
            pe.p = m ? double(pe.f_ij) / double(m) : 0.5;
            pe.h = pair_evidence(pe.f_ij, pe.f_ji);
            if (rep.argmin_i < 0 || pe.h < rep.h) {
                rep.h = pe.h;
                rep.argmin_i = i;
                rep.argmin_j = j;
            }
            rep.pairs.push_back(pe);
        }
    }
    return rep;
}

} // namespace pomine
