#pragma once

#include "support.hpp"

#include "streamgraph/io.hpp"

#include "doctest.h"

#include <optional>

namespace sg::testing {

inline Rational R(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

inline StreamGraph fixture(const std::string& name) { return read_stream_file(data_path(name)); }

template <class F>
std::optional<ErrorCode> error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline Metric exact(const Outcome& o) { return o && o->exact ? Metric(*o->exact) : std::nullopt; }

}  // namespace sg::testing
