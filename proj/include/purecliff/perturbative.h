// Copyright 2026 The purecliff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PURECLIFF_PERTURBATIVE_H
#define PURECLIFF_PERTURBATIVE_H

#include <stdexcept>
#include <string>
#include <vector>

#include "purecliff/montecarlo.h"
#include "purecliff/noise.h"
#include "purecliff/protocols.h"
#include "purecliff/rational.h"

namespace purecliff {

/// A branch whose outcome depends on random measurement results.
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FaultTag : uint8_t { Detected, UndetectedHarmless, UndetectedHarmful };
const char *fault_tag_name(FaultTag t);

struct ClassifiedFault {
    size_t site = 0;
    size_t alternative = 0;
    FaultTag tag = FaultTag::Detected;
};

struct ExpansionReport {
    std::string protocol;
    LinearPolynomial success;
    LinearPolynomial fidelity;
    size_t branch_count = 0;
    std::vector<FaultSite> sites;
    std::vector<ClassifiedFault> classified;

    size_t count(FaultTag t) const;
    /// "success = 1 - 10*eps\nfidelity = 1 - 2*eps\n"
    std::string text() const;
    static std::string csv_header();
    /// Two rows, one per polynomial.
    std::string csv_rows() const;
};

/// One no-fault branch plus one branch per single-fault alternative. Nonzero
/// model parameters select the expansion variables; their values are unused.
ExpansionReport expand(const ProtocolSpec &protocol, const NoiseModel &model, int threads = 1);
ExpansionReport expand(const std::string &name, const Circuit &circuit, const NoiseModel &model, int threads = 1);

struct CrossValidationRow {
    double eps = 0;
    double mc_success = 0;
    double mc_fidelity = 0;
    double poly_success = 0;
    double poly_fidelity = 0;
    double bound_success = 0;
    double bound_fidelity = 0;
    bool flagged = false;
};

/// Allowed |MC - polynomial| for a binomial estimate over `n` samples:
/// 3 sigma (from the polynomial value) + allowance * s^2, where s is the sum of
/// the noise parameters.
double cross_validation_bound(double poly_value, uint64_t n, double s, double allowance);

std::vector<CrossValidationRow> cross_validate(const ProtocolSpec &protocol, const NoiseModel &model,
                                               const std::vector<double> &eps_values, uint64_t trials,
                                               uint64_t seed, double allowance = 50, int threads = 0);

/// Exact success and fidelity under network noise only, by enumerating every
/// fault pattern over the network sites. Counts are grouped by the number of
/// faulty sites so any eps can be evaluated afterwards.
class ExactEnumeration {
   public:
    explicit ExactEnumeration(const Circuit &circuit, size_t max_sites = 10);

    size_t site_count() const {
        return sites_;
    }
    double success(double eps) const;
    /// Post-selected fidelity; NaN when success is zero.
    double fidelity(double eps) const;
    /// P(pass and purified state equals target).
    double joint(double eps) const;

   private:
    double weigh(const std::vector<double> &counts, double eps) const;

    size_t sites_ = 0;
    std::vector<double> pass_;
    std::vector<double> match_;
};

}  // namespace purecliff

#endif
