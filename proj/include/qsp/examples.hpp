// Worked example contexts and the acceptance suite built on them.
//
// The suite has eleven numbered criteria.  Each one runs independently and
// reports a pass flag plus a short deterministic description of what was
// compared; run_all_json() is what the `examples` command prints.
#pragma once

#include "qsp/kmatrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qsp::examples {

/// One vertex, q = zeta_N^e.
Context rank1(int N, int e, int D);
/// Type A2: q_ii = zeta^2, q_12 = zeta^-1.
Context sl3(int N, bool flip, int D);
/// Two disconnected vertices with q_ii = zeta^2.
Context a1a1(int N, bool flip, int D);
/// Even vertex and odd isotropic vertex, tau = id.
Context super21(int N, int D);
/// N = 24, q_ii = -zeta_12^2, q_12 = zeta_24, tau = flip.
Context ufo8(int D);

/// x1^3, x2^3 and the degree (2, 2) relation of the distinguished pre-Nichols algebra.
std::vector<FreeElement> ufo8_relations(const Context& ufo);
/// (x1 x2 - q12 x2 x1)^M.
FreeElement x12_power(const Context& ctx, int M);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double budget = 0;      // seconds allowed
};

constexpr int criterion_count = 11;

/// Runs criterion id in 1..criterion_count.  The runtime budget is part of the verdict.
CriterionResult run_criterion(int id);

/// All criteria, without timings so that the output is reproducible.
nlohmann::json run_all_json();

}  // namespace qsp::examples
