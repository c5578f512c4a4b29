#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lnlfpc {

// Half-open source region. Lines and columns are 1-based; len counts
// characters on a single line.
struct Span {
    uint32_t line = 0;
    uint32_t col = 0;
    uint32_t len = 0;
};

enum class Severity : uint8_t { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    Span span;
    std::string code;        // "E-PARSE", "E-LINEAR-REUSED", ...
    std::string message;
    std::string definition;  // enclosing top-level definition, when known

    static Diagnostic error(std::string code, std::string message, Span span = {}) {
        Diagnostic d;
        d.code = std::move(code);
        d.message = std::move(message);
        d.span = span;
        return d;
    }
};

// Minimal success-or-diagnostic result. The failure arm carries exactly one
// diagnostic; batch interfaces aggregate these into vectors.
template <typename T>
class Result {
public:
    Result(T value) : value_(std::move(value)) {}
    Result(Diagnostic diag) : diag_(std::move(diag)) {}

    bool ok() const { return value_.has_value(); }
    explicit operator bool() const { return ok(); }

    const T& operator*() const { return *value_; }
    T& operator*() { return *value_; }
    const T* operator->() const { return &*value_; }

    const Diagnostic& error() const { return diag_; }
    Diagnostic takeError() { return std::move(diag_); }

private:
    std::optional<T> value_;
    Diagnostic diag_;
};

}  // namespace lnlfpc
