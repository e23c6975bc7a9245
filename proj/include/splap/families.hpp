#pragma once

#include <string>

// Built-in flux and diffusion coefficient families. Both vanish at 0 and
// are globally Lipschitz, which is what the solver theory needs.

namespace splap {

enum class FluxKind { zero, linear, sine };

struct FluxFamily {
    FluxKind kind = FluxKind::zero;
    double param = 0.0;

    double eval(double v) const;
    double deriv(double v) const;
    double lipschitz() const;
    bool is_zero() const { return kind == FluxKind::zero || param == 0.0; }
    std::string name() const;

    static FluxFamily zero() { return {}; }
    static FluxFamily linear(double a) { return {FluxKind::linear, a}; }
    static FluxFamily sine(double a) { return {FluxKind::sine, a}; }
    // Throws ConfigError on an unknown name; `key` names the config entry.
    static FluxFamily parse(const std::string& name, double param, const std::string& key);
};

enum class DiffusionKind { zero, linear, bounded_sine };

struct DiffusionFamily {
    DiffusionKind kind = DiffusionKind::zero;
    double param = 0.0;

    double eval(double v) const;
    double lipschitz() const;
    bool bounded() const { return kind != DiffusionKind::linear || param == 0.0; }
    bool is_zero() const { return kind == DiffusionKind::zero || param == 0.0; }
    std::string name() const;

    static DiffusionFamily zero() { return {}; }
    static DiffusionFamily linear(double a) { return {DiffusionKind::linear, a}; }
    static DiffusionFamily bounded_sine(double a) { return {DiffusionKind::bounded_sine, a}; }
    static DiffusionFamily parse(const std::string& name, double param, const std::string& key);
};

}  // namespace splap
