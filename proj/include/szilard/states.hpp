// Copyright 2026 The szilard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string_view>

#include "szilard/qmath.hpp"

namespace szilard {

/// Gibbs parameter of the medium: p(|1>) = (1 + eta) / 2.
/// eta lies in [-1, 1]; positive temperatures give eta in (-1, 0].
class GibbsParam {
  public:
    explicit GibbsParam(double eta);

    /// eta = (exp(-beta) - 1) / (exp(-beta) + 1), with k_B T absorbed into beta.
    static GibbsParam from_beta(double beta);

    [[nodiscard]] double eta() const noexcept { return eta_; }

  private:
    double eta_;
};

enum class Family { PureEntangled, ClassicalCorrelated, GibbsInvariant, Werner };

std::string_view to_string(Family family) noexcept;
/// Accepts "pure", "classical", "gibbs-invariant", "werner" and the
/// CamelCase names.
std::optional<Family> parse_family(std::string_view name) noexcept;

QState2 gibbs(double eta);

/// Projector onto sqrt((1+eta)/2)|11> + sqrt((1-eta)/2)|00>.
QState4 pure_entangled(double eta);
/// (1+eta)/2 |11><11| + (1-eta)/2 |00><00|.
QState4 classical_correlated(double eta);
/// q * pure_entangled + (1-q) * classical_correlated.
QState4 gibbs_invariant(double eta, double q);
/// q * pure_entangled + (1-q) * I/4. Its medium marginal is gibbs(q * eta).
QState4 werner(double eta, double q);

struct StateFamily {
    Family tag = Family::PureEntangled;
    double eta = 0.0;
    double q = 1.0; // ignored by PureEntangled and ClassicalCorrelated

    [[nodiscard]] QState4 build() const;
};

QState4 make_state(Family family, double eta, double q);

/// vz of the medium marginal: the eta a Gibbs medium would need to have the
/// same energy. Throws NonDiagonalReduced if the marginal has coherences.
double effective_eta(const QState4 &rho);

} // namespace szilard
