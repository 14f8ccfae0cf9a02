// Copyright 2026 The dimwit Authors
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

#ifndef DIMWIT_QUANTUM_H
#define DIMWIT_QUANTUM_H

#include <cstddef>
#include <vector>

#include "dimwit/linalg.h"

namespace dimwit {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kSpectrumTolerance = 1e-10;
inline constexpr double kUnitalityTolerance = 1e-10;
inline constexpr double kProbabilityClampWindow = 1e-9;

/// Density operator: Hermitian, unit trace, positive semidefinite.
class State {
   public:
    /// Throws ValidationError if rho violates any invariant.
    explicit State(CMatrix rho);
    /// Pure state |psi><psi|; psi is normalized first (must be nonzero).
    static State pure(std::span<const Complex> psi);
    static State basis(std::size_t dim, std::size_t k);

    const CMatrix &rho() const {
        return rho_;
    }
    std::size_t dim() const {
        return rho_.dim();
    }

   private:
    CMatrix rho_;
};

/// Measurement operator M with 0 <= M <= 1.
class Effect {
   public:
    explicit Effect(CMatrix m);
    static Effect projector(std::span<const Complex> psi);
    static Effect basis(std::size_t dim, std::size_t k);

    const CMatrix &m() const {
        return m_;
    }
    std::size_t dim() const {
        return m_.dim();
    }

   private:
    CMatrix m_;
};

/// Completely positive map on effects, M -> sum_j K_j^dag M K_j, with
/// sum_j K_j^dag K_j = 1 (the map sends the identity effect to itself).
class Channel {
   public:
    explicit Channel(std::vector<CMatrix> kraus);

    const std::vector<CMatrix> &kraus() const {
        return kraus_;
    }
    std::size_t dim() const {
        return kraus_.front().dim();
    }

   private:
    std::vector<CMatrix> kraus_;
};

/// Single-Kraus channel M -> u^dag M u. Throws unless u is unitary within 1e-10.
Channel channel_from_unitary(const CMatrix &u);

/// sum_j K_j^dag m K_j, without re-validating the result.
CMatrix apply_channel(const Channel &ch, const CMatrix &m);
/// sum_j K_j^dag m K_j as a validated Effect.
Effect apply_channel(const Channel &ch, const Effect &m);

/// The channel applied n times to m.
CMatrix apply_channel_power(const Channel &ch, const CMatrix &m, unsigned n);

struct SequenceProbability {
    double value;
    /// Set when the raw trace fell outside [-1e-9, 1 + 1e-9]; value is then unclamped.
    bool out_of_range;
};

/// Tr(rho * E^n(m)) for n <= 16. Values within 1e-9 of [0, 1] are clamped into it.
SequenceProbability sequence_probability(const State &p, const Channel &ch, unsigned n, const Effect &m);

}  // namespace dimwit

#endif
