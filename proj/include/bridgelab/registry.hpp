#pragma once

#include "bridgelab/config.hpp"
#include "bridgelab/game.hpp"
#include "bridgelab/gentry.hpp"

namespace bridgelab {

// Name-addressable constructions over a preset table. Ids accepted:
//   schemes:  preset ids (lwe-toy, gm-toy, ...), trivial, gsw-*,
//             graph:<bridge-id>
//   homs:     trivial, gsw-toy, gsw-fche, fche:<backend>, bootstrap:<backend>
//   bridges:  identity[:<scheme>], gm-identity, lwe-additive, lwe-additive-x2,
//             double-additive, modswitch, modswitch2, halfkey-f, halfkey-g,
//             halfkey-composed, gentry:<inner>:<outer>[:ctbits|:shared],
//             circuit-xor:<hom>, circuit-and:<hom>, circuit-addersum:<hom>
//   adversaries: random-guess, plaintext-reader, omniscient, reassembly
//   samplers:   gentry-real, gentry-zero, uniform-bits, const-zero
//   distinguishers: byte-parity, first-bit, bit-marginal
class Registry {
public:
    explicit Registry(PresetTable presets = builtin_presets());

    const PresetTable& presets() const { return presets_; }

    Scheme scheme(const std::string& id) const;
    HomScheme hom(const std::string& id) const;
    // preset_override swaps the parameter set where the bridge family allows
    // it (e.g. lwe-additive on lwe-toy instead of the default lwe-add).
    Bridge bridge(const std::string& id, const std::string& preset_override = "") const;
    Adversary adversary(const std::string& id) const;
    ValueSampler sampler(const std::string& id) const;
    Distinguisher distinguisher(const std::string& id) const;

    std::vector<std::string> scheme_ids() const;
    std::vector<std::string> hom_ids() const;
    std::vector<std::string> bridge_ids() const;
    std::vector<std::string> adversary_ids() const;
    std::vector<std::string> sampler_ids() const;
    std::vector<std::string> distinguisher_ids() const;

private:
    const std::map<std::string, std::string>& preset(const std::string& id) const;

    PresetTable presets_;
};

// Common single-output circuits used by the circuit-bridge registry entries.
BooleanCircuit xor_circuit();
BooleanCircuit and_circuit();
// Sum output of a full adder (x ^ y ^ cin, five-gate form together with carry
// available via full_adder_circuit).
BooleanCircuit adder_sum_circuit();
// Two outputs (sum, carry) in five gates.
BooleanCircuit full_adder_circuit();

} // namespace bridgelab
