#pragma once

#include <cstdint>
#include <vector>

#include "qhex/errors.hpp"

namespace qhex {

/// Strictly increasing integer sequence a_1 < ... < a_m. Encodes the dent
/// positions of a region, or an arbitrary column-index sequence for the
/// determinant identities.
struct DentSequence {
    std::vector<std::int64_t> values;

    DentSequence() = default;
    explicit DentSequence(std::vector<std::int64_t> v) : values(std::move(v)) { validate(); }

    std::size_t size() const { return values.size(); }
    std::int64_t operator[](std::size_t i) const { return values[i]; }

    void validate() const {
        for (std::size_t i = 1; i < values.size(); ++i)
            if (values[i - 1] >= values[i])
                throw std::invalid_argument("dent sequence must be strictly increasing");
    }

    /// (a_2, ..., a_m); requires length >= 2.
    DentSequence drop_first() const {
        if (values.size() < 2) throw std::invalid_argument("drop_first requires length >= 2");
        return DentSequence(std::vector<std::int64_t>(values.begin() + 1, values.end()));
    }

    /// (a_1, ..., a_{m-1}); requires length >= 2.
    DentSequence drop_last() const {
        if (values.size() < 2) throw std::invalid_argument("drop_last requires length >= 2");
        return DentSequence(std::vector<std::int64_t>(values.begin(), values.end() - 1));
    }

    /// (a_2, ..., a_{m-1}); requires length >= 2, may be empty.
    DentSequence drop_both() const {
        if (values.size() < 2) throw std::invalid_argument("drop_both requires length >= 2");
        return DentSequence(std::vector<std::int64_t>(values.begin() + 1, values.end() - 1));
    }

    /// (a_1 - 1, ..., a_m - 1).
    DentSequence shifted_down() const {
        std::vector<std::int64_t> v = values;
        for (auto& x : v) x -= 1;
        return DentSequence(std::move(v));
    }

    bool operator==(const DentSequence&) const = default;
};

/// The quartered hexagon with dents, seen through its path model: m paths,
/// path i from (2i-1, i-1) to (2m-1+k, dents[i]).
struct RegionSpec {
    int m = 1;
    int k = 0;
    DentSequence dents;

    RegionSpec() = default;
    RegionSpec(int m_, int k_, DentSequence d) : m(m_), k(k_), dents(std::move(d)) { validate(); }

    void validate() const {
        if (m < 1) throw std::invalid_argument("region requires m >= 1");
        if (k < 0) throw std::invalid_argument("region requires k >= 0");
        if (dents.size() != static_cast<std::size_t>(m))
            throw std::invalid_argument("dent sequence length must equal m");
        dents.validate();
    }

    /// The physically meaningful dent window -(m+k-1) <= a_1, a_m <= m-1.
    /// Sequences outside it are still legal inputs for the enumeration and
    /// determinant routes (their generating function vanishes above m-1).
    bool in_window() const {
        return dents[0] >= -(static_cast<std::int64_t>(m) + k - 1) &&
               dents[dents.size() - 1] <= static_cast<std::int64_t>(m) - 1;
    }
};

}  // namespace qhex
