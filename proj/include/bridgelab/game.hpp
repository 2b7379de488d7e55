#pragma once

#include <map>

#include "bridgelab/bridge.hpp"

namespace bridgelab {

// Everything an adversary is allowed to look at. For symmetric schemes the
// key slot holds the scheme's redacted view; the encryption oracle is always
// available. whitebox_sk is set only by test fixtures that opt in.
struct AdversaryView {
    const Scheme* scheme = nullptr;
    Value pk_view;
    std::vector<Value> aux;
    std::function<Value(const Value& m, Rng&)> enc_oracle;
    std::optional<Value> whitebox_sk;
};

struct Choice {
    Value m0, m1;
    Value state;
};

struct Guess {
    std::optional<int> bit; // nullopt = abstain, scored as a uniform guess
};

struct Adversary {
    std::string name;
    std::function<Choice(const AdversaryView&, Rng&)> choose;
    std::function<Guess(const AdversaryView&, const Value& state, const Value& challenge,
                        Rng&)>
        guess;
};

// Outcome record of a distinguishing experiment. advantage is the estimate of
// |Pr[out=1] - Pr[out=0]| (1.0 for a perfect adversary); ci_halfwidth is the
// two-sided Hoeffding halfwidth for the win-rate estimate at confidence
// 1 - delta.
struct GameReport {
    std::string game;
    std::vector<std::string> participants;
    std::uint64_t trials = 0;
    std::uint64_t wins = 0;
    double advantage = 0.0;
    double ci_halfwidth = 0.0;
    double delta = 0.01;
    std::uint64_t seed = 0;
    std::map<std::string, bool> flags;
    std::uint64_t abstentions = 0;

    double win_rate() const {
        return trials ? static_cast<double>(wins) / static_cast<double>(trials) : 0.0;
    }
};

double hoeffding_halfwidth(std::uint64_t trials, double delta);

struct IndcpaOptions {
    double delta = 0.01;
    bool expose_sk_for_tests = false;
    std::vector<std::string> flags;
};

// The chosen-plaintext indistinguishability experiment: fresh keygen per
// trial, adversary picks (m0, m1), challenger encrypts a uniform choice, win
// iff the adversary names the coin.
GameReport run_indcpa(const Scheme& scheme, const Adversary& adv, std::uint64_t trials,
                      std::uint64_t seed, const IndcpaOptions& opts = {});

// Bridge security game: the experiment above on the source scheme augmented
// with [pk2, bk] from a fresh bundle each trial (pk2 as the public view).
GameReport run_bridge_indcpa(const Bridge& b, const Adversary& adv, std::uint64_t trials,
                             std::uint64_t seed, const IndcpaOptions& opts = {});

// Distribution distinguishing: one side sampled per trial, the distinguisher
// guesses the side; advantage reported as |P(d=1|A) - P(d=1|B)|. Reports
// always carry heuristic_only.
using ValueSampler = std::function<Value(Rng&)>;
using Distinguisher = std::function<int(const Value&)>;

GameReport run_distinguisher(const ValueSampler& a, const ValueSampler& b,
                             const Distinguisher& d, std::uint64_t trials,
                             std::uint64_t seed, double delta = 0.01);

// A conditional sampler family: base() draws the conditioning value, fiber(x)
// draws from the fiber over x, project recovers the conditioning value.
struct FiberSampler {
    ValueSampler base;
    std::function<Value(const Value& x, Rng&)> fiber;
    std::function<Value(const Value& y)> project;
};

// --- shipped adversaries -----------------------------------------------------

// Picks the first two plaintexts and flips a coin.
Adversary random_guess_adversary();
// Compares the challenge to deterministic encodings of m0/m1; wins exactly
// when ciphertexts reveal plaintexts.
Adversary plaintext_reader_adversary();
// Test fixture: decrypts the challenge with the whitebox key.
Adversary omniscient_adversary();
// Reassembles the source secret key from the two bridge-key halves in the aux
// list, then decrypts the challenge; abstains when only one half is present.
Adversary halfkey_attacker(const Scheme& base);

} // namespace bridgelab
