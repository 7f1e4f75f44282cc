#include "jtspec/basis.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace jtspec {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

BasisSpec BasisSpec::per_mode(int n_max_1, int n_max_2)
{
    return BasisSpec{n_max_1, n_max_2, Truncation::PerMode, 0};
}

BasisSpec BasisSpec::total_number(int n_max)
{
    return BasisSpec{n_max, n_max, Truncation::TotalNumber, n_max};
}

int BasisSpec::cutoff() const
{
    return truncation == Truncation::TotalNumber ? total_max : std::max(n_max_1, n_max_2);
}

std::string to_string(const BasisSpec& spec)
{
    std::ostringstream os;
    if (spec.truncation == Truncation::PerMode)
        os << "PerMode(" << spec.n_max_1 << ',' << spec.n_max_2 << ')';
    else
        os << "TotalNumber(" << spec.total_max << ')';
    return os.str();
}

Basis::Basis(BasisSpec spec) : spec_(spec)
{
    if (spec_.truncation == Truncation::TotalNumber) {
        if (spec_.total_max < 1)
            throw std::invalid_argument("TotalNumber cutoff must be >= 1, got " + std::to_string(spec_.total_max));
        spec_.n_max_1 = spec_.n_max_2 = spec_.total_max;
    } else if (spec_.n_max_1 < 1 || spec_.n_max_2 < 1) {
        throw std::invalid_argument("per-mode cutoffs must be >= 1, got " + to_string(spec_));
    }

    stride_ = static_cast<std::size_t>(spec_.n_max_2) + 1;
    const std::size_t plane = (static_cast<std::size_t>(spec_.n_max_1) + 1) * stride_;
    lookup_.assign(2 * plane, npos);

    for (Spin s : {Spin::Up, Spin::Down}) {
        for (int n1 = 0; n1 <= spec_.n_max_1; ++n1) {
            for (int n2 = 0; n2 <= spec_.n_max_2; ++n2) {
                if (spec_.truncation == Truncation::TotalNumber && n1 + n2 > spec_.total_max)
                    continue;
                lookup_[static_cast<std::size_t>(s) * plane + slot(n1, n2)] = states_.size();
                states_.push_back({s, n1, n2});
            }
        }
    }
}

std::size_t Basis::slot(int n1, int n2) const
{
    return static_cast<std::size_t>(n1) * stride_ + static_cast<std::size_t>(n2);
}

bool Basis::contains(const BasisState& s) const
{
    return index(s).has_value();
}

std::optional<std::size_t> Basis::index(const BasisState& s) const
{
    if (s.n1 < 0 || s.n2 < 0 || s.n1 > spec_.n_max_1 || s.n2 > spec_.n_max_2)
        return std::nullopt;
    const std::size_t plane = lookup_.size() / 2;
    const std::size_t k = lookup_[static_cast<std::size_t>(s.spin) * plane + slot(s.n1, s.n2)];
    if (k == npos)
        return std::nullopt;
    return k;
}

}  // namespace jtspec
