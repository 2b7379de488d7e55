#pragma once

#include <memory>
#include <span>
#include <optional>

#include "bridgelab/lwe.hpp"
#include "bridgelab/scheme.hpp"

namespace bridgelab {

struct GentryInfo; // defined in gentry.hpp

// How the second scheme's secret key arises from the first.
enum class KeyMode { independent, derived, shared };

// A composite never silently claims to be a correct bridge: composition may
// break correctness, so composites carry correctness_unverified until a check
// passes or the second factor is certified complete.
enum class BridgeStatus { constructed, correctness_unverified };

// Staged key material. Provenance is positional: (sk1, pk1) from the first
// scheme's keygen, (sk2, pk2) from the second stage seeded with sk1, bk from
// the full quadruple.
struct KeyBundle {
    Value sk1, pk1, sk2, pk2, bk;
};

struct StageTwoThree {
    Value sk2, pk2, bk;
};

// A public ciphertext conversion between two schemes: a plaintext map iota,
// a three-stage key generation, and the conversion procedure itself. On fresh
// encryptions, decrypting a converted ciphertext under sk2 yields iota(m).
struct Bridge {
    std::string id;
    Scheme source, target;
    std::function<Value(const Value& m1)> iota;
    std::function<StageTwoThree(const Value& sk1, const Value& pk1,
                                const SecurityParameter&, Rng&)>
        stages23;
    std::function<Value(const Value& bk, const Value& c1, Rng&)> convert;
    KeyMode key_mode = KeyMode::shared;
    BridgeStatus status = BridgeStatus::constructed;
    // Set by check_complete (or certify_complete) — the fast path that makes a
    // composition a bridge without a fresh correctness run.
    std::optional<bool> complete_certificate;

    // Introspection for composites and recryption bridges.
    std::shared_ptr<const Bridge> composed_f, composed_g;
    std::shared_ptr<const GentryInfo> gentry;

    KeyBundle keygen(const SecurityParameter& lambda, Rng& rng) const {
        KeyPair kp = source.keygen(lambda, rng);
        StageTwoThree st = stages23(kp.sk, kp.pk, lambda, rng);
        return KeyBundle{kp.sk, kp.pk, st.sk2, st.pk2, st.bk};
    }
};

// Fraction of trials where decrypt2(convert(encrypt1(m))) != iota(m), fresh
// keys and fresh encryptions per trial.
double check_bridge_correct(const Bridge& b, std::uint64_t trials, std::uint64_t seed);

enum class CheckMode { exhaustive, sampled };

struct CompletenessReport {
    bool complete = false;
    std::uint64_t checked = 0;
    std::optional<Value> witness; // first failing source ciphertext, search order below
    std::string mode;
};

// Verifies decrypt2(convert(c1)) = iota(decrypt1(c1)) for every c1 (exhaustive
// mode, lexicographic enumeration so witnesses are reproducible) or for
// `budget` uniform samples. exhaust_keys additionally ranges over the whole
// enumerable key space of the source scheme; otherwise `keysets` seeded key
// bundles are used.
CompletenessReport check_complete(const Bridge& b, CheckMode mode, std::uint64_t budget,
                                  std::uint64_t seed, bool exhaust_keys = false,
                                  unsigned keysets = 1);

// Records a completeness check outcome on the bridge value.
void certify_complete(Bridge& b, const CompletenessReport& report);

// The composite of Def-style composition: f's full keygen, then only stages
// 2-3 of g seeded with (sk2, pk2); bridge key (bk_f, pk2, bk_g); conversion
// g after f. The published pk2 component is the scheme's public view.
Bridge compose(const Bridge& f, const Bridge& g);

Bridge identity_bridge(const Scheme& s);

// Pairwise-sum conversion E^(2) -> E over the additive LWE scheme: empty
// bridge key, shared keys, iota = addition in Z_2.
Bridge lwe_additive_bridge(const LweParams& p);
// Componentwise variant E^(4) -> E^(2) (sums adjacent pairs), for stacking.
Bridge lwe_additive_pair_bridge(const LweParams& p);
// Same conversion over the interval-decryption family, so it can feed the
// rescaling bridge (needs 4B < q/2 so fresh sums still decode).
Bridge lwe_additive_bridge_threshold(const LweParams& p);

// Rescaling conversion between LWE^{2/q} and LWE^{2/Q}: (a, b) -> (Q/q * a,
// Q/q * b); same key viewed in Z_Q; empty bridge key.
Bridge modswitch_bridge(unsigned n, u64 q, u64 Q, u64 noise);

// The half-key construction: two bridges that are individually correct and
// complete while their composite's bridge key reassembles the whole secret.
struct HalfkeyBridges {
    Bridge f, g;
    Scheme mid, far; // padded schemes the bridges land in
};
HalfkeyBridges halfkey_bridges(const Scheme& base);

// Componentwise bundle of bridges E^(r) -> E sharing one key bundle, giving a
// bridge E^(r) -> E^(s).
Bridge concat_bridges(std::span<const Bridge> bs);

// The scheme packaging a bridge's two ciphertext components; decryption reads
// the first. By default the two inner encryptions draw independent
// randomness; shared_randomness switches to the single-sample reading.
Scheme graph_scheme(const Bridge& b, bool shared_randomness = false);

} // namespace bridgelab
