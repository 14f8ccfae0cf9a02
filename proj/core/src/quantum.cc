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

#include "dimwit/quantum.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dimwit/error.h"

namespace dimwit {

namespace {

std::vector<Complex> normalized(std::span<const Complex> psi) {
    double n2 = 0;
    for (const auto &a : psi) {
        n2 += std::norm(a);
    }
    if (!(n2 > 0) || !std::isfinite(n2)) {
        throw ValidationError("state vector must be nonzero and finite");
    }
    std::vector<Complex> out(psi.begin(), psi.end());
    for (auto &a : out) {
        a /= std::sqrt(n2);
    }
    return out;
}

void check_hermitian(const CMatrix &m, const char *what) {
    if (m.dim() == 0) {
        throw ValidationError(std::string(what) + ": empty matrix");
    }
    double defect = m.hermiticity_defect();
    if (!(defect <= kHermitianTolerance)) {
        std::ostringstream ss;
        ss << what << ": not Hermitian (max deviation " << defect << ")";
        throw ValidationError(ss.str());
    }
}

}  // namespace

State::State(CMatrix rho) : rho_(std::move(rho)) {
    check_hermitian(rho_, "State");
    Complex tr = rho_.trace();
    if (!(std::abs(tr - 1.0) <= kTraceTolerance)) {
        std::ostringstream ss;
        ss << "State: trace " << tr.real() << " differs from 1";
        throw ValidationError(ss.str());
    }
    auto ev = eig_hermitian(rho_);
    if (ev.front() < -kSpectrumTolerance) {
        std::ostringstream ss;
        ss << "State: not positive semidefinite (smallest eigenvalue " << ev.front() << ")";
        throw ValidationError(ss.str());
    }
}

State State::pure(std::span<const Complex> psi) {
    auto v = normalized(psi);
    return State(CMatrix::outer(v));
}

State State::basis(std::size_t dim, std::size_t k) {
    return State(CMatrix::basis_projector(dim, k));
}

Effect::Effect(CMatrix m) : m_(std::move(m)) {
    check_hermitian(m_, "Effect");
    auto ev = eig_hermitian(m_);
    if (ev.front() < -kSpectrumTolerance || ev.back() > 1 + kSpectrumTolerance) {
        std::ostringstream ss;
        ss << "Effect: spectrum [" << ev.front() << ", " << ev.back() << "] outside [0, 1]";
        throw ValidationError(ss.str());
    }
}

Effect Effect::projector(std::span<const Complex> psi) {
    auto v = normalized(psi);
    return Effect(CMatrix::outer(v));
}

Effect Effect::basis(std::size_t dim, std::size_t k) {
    return Effect(CMatrix::basis_projector(dim, k));
}

Channel::Channel(std::vector<CMatrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw ValidationError("Channel: needs at least one Kraus operator");
    }
    std::size_t d = kraus_.front().dim();
    if (d == 0) {
        throw ValidationError("Channel: empty Kraus operator");
    }
    CMatrix sum(d);
    for (const auto &k : kraus_) {
        if (k.dim() != d) {
            throw ValidationError("Channel: Kraus operators have different dimensions");
        }
        sum += k.adjoint() * k;
    }
    double defect = max_abs_diff(sum, CMatrix::identity(d));
    if (!(defect <= kUnitalityTolerance)) {
        std::ostringstream ss;
        ss << "Channel: sum of K^dag K deviates from identity by " << defect;
        throw ValidationError(ss.str());
    }
}

Channel channel_from_unitary(const CMatrix &u) {
    if (u.dim() == 0) {
        throw ValidationError("channel_from_unitary: empty matrix");
    }
    double defect = u.unitarity_defect();
    if (!(defect <= kUnitalityTolerance)) {
        std::ostringstream ss;
        ss << "channel_from_unitary: matrix is not unitary (max |u^dag u - 1| = " << defect << ")";
        throw ValidationError(ss.str());
    }
    return Channel({u});
}

CMatrix apply_channel(const Channel &ch, const CMatrix &m) {
    if (m.dim() != ch.dim()) {
        std::ostringstream ss;
        ss << "apply_channel: channel dimension " << ch.dim() << " does not match operator dimension " << m.dim();
        throw ValidationError(ss.str());
    }
    CMatrix out(m.dim());
    for (const auto &k : ch.kraus()) {
        out += k.adjoint() * (m * k);
    }
    return out;
}

Effect apply_channel(const Channel &ch, const Effect &m) {
    return Effect(apply_channel(ch, m.m()));
}

CMatrix apply_channel_power(const Channel &ch, const CMatrix &m, unsigned n) {
    CMatrix out = m;
    for (unsigned k = 0; k < n; k++) {
        out = apply_channel(ch, out);
    }
    return out;
}

SequenceProbability sequence_probability(const State &p, const Channel &ch, unsigned n, const Effect &m) {
    if (p.dim() != ch.dim() || m.dim() != ch.dim()) {
        std::ostringstream ss;
        ss << "sequence_probability: dimension mismatch (state " << p.dim() << ", channel " << ch.dim() << ", effect "
           << m.dim() << ")";
        throw ValidationError(ss.str());
    }
    if (n > 16) {
        throw ValidationError("sequence_probability: at most 16 repetitions are supported");
    }
    double raw = trace_of_product(p.rho(), apply_channel_power(ch, m.m(), n)).real();
    if (raw >= -kProbabilityClampWindow && raw <= 1 + kProbabilityClampWindow) {
        return {std::clamp(raw, 0.0, 1.0), false};
    }
    return {raw, true};
}

}  // namespace dimwit
