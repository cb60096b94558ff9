/**
 * @file cli.hpp
 * @brief JSON front end: context and relation files, job dispatch and
 *        serialization.  The command line tool is a thin wrapper around
 *        run_job.
 */
#pragma once

#include "qsp/kmatrix.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsp {

/// Malformed or inconsistent input (exit status 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Context file:
 *   { "n": 2, "N": 5, "q": [["z^2", "z^-1"], ["z^-1", "z^2"]], "tau": [2, 1], "D": 4 }
 * Entries of q are integers or polynomial literals in z = zeta_N.  tau is a
 * 1-based permutation (identity when absent), D defaults to 6 and n, when
 * present, must equal the size of q.
 */
Context parse_context(const nlohmann::json& j);

/// Optional "c" entry of a context file ("sym" or a list); empty when absent.
std::vector<std::string> context_parameter_list(const nlohmann::json& j);

/// "sym" alone gives c_1..c_n symbolic; otherwise one entry per vertex, each "sym" or a literal.
std::vector<Scalar> parse_parameters(const std::vector<std::string>& items, int n, int N);
bool is_numeric(const std::vector<Scalar>& c);
/// Comma separated list with surrounding blanks removed.
std::vector<std::string> split_list(const std::string& s);

/**
 * Relation file: { "relations": [ { "name": ..., "terms": [ { "word": [1, 1, 2], "coef": "1" }, ... ] } ] }
 * or the bare array.  Letters are 1-based; every relation must be nonzero
 * and homogeneous.
 */
std::vector<FreeElement> parse_relations(const nlohmann::json& j, const Context& ctx);

/// Serialization helpers.
nlohmann::json word_json(const Word& w);
nlohmann::json weight_json(const Weight& w);
nlohmann::json terms_json(const FreeElement& f);
nlohmann::json star_terms_json(const StarElement& u);
nlohmann::json scalar_json(const Scalar& s);
nlohmann::json matrix_json(const Matrix& m);

struct JobSpec {
    Context context;
    std::string command;
    std::optional<int> degree;                          // overrides context.D
    std::optional<std::vector<FreeElement>> relations;  // user presentation
    std::vector<Scalar> c;
    int threads = 1;
};

struct JobResult {
    nlohmann::json output;
    int exit_code = 0;      // 0 pass, 1 mathematical mismatch
};

/// Throws InputError for unknown commands and unusable input.
JobResult run_job(const JobSpec& spec);

const std::vector<std::string>& command_names();

/// Compute the degree data of every degree of height <= D using several threads.
void precompute_degrees(const NicholsAlgebra& alg, int D, int threads);

}  // namespace qsp
