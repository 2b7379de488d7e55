#include "bridgelab/game.hpp"

#include "bridgelab/gentry.hpp"

#include <cmath>

namespace bridgelab {

double hoeffding_halfwidth(std::uint64_t trials, double delta) {
    return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(trials)));
}

namespace {

void validate_pair(const Scheme& scheme, const Value& m0, const Value& m1) {
    require(m0 != m1, Errc::InvalidMessagePair, "adversary must pick distinct messages");
    require(m0.tag() == scheme.plaintext.tag() && m1.tag() == scheme.plaintext.tag(),
            Errc::InvalidMessagePair, "messages outside the plaintext space");
}

GameReport finish(GameReport r) {
    r.advantage = std::abs(2.0 * r.win_rate() - 1.0);
    r.ci_halfwidth = hoeffding_halfwidth(r.trials, r.delta);
    return r;
}

} // namespace

GameReport run_indcpa(const Scheme& scheme, const Adversary& adv, std::uint64_t trials,
                      std::uint64_t seed, const IndcpaOptions& opts) {
    require(trials >= 1, Errc::InvalidParams, "trials must be >= 1");
    const SecurityParameter lambda;

    GameReport r;
    r.game = "indcpa";
    r.participants = {scheme.name, adv.name};
    r.trials = trials;
    r.seed = seed;
    r.delta = opts.delta;
    for (const auto& f : opts.flags) r.flags[f] = true;

    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng key_rng = Rng::derive(seed, {t, 0});
        Rng adv_rng = Rng::derive(seed, {t, 1});
        Rng bit_rng = Rng::derive(seed, {t, 2});
        Rng enc_rng = Rng::derive(seed, {t, 3});
        Rng score_rng = Rng::derive(seed, {t, 4});

        KeyPair kp = scheme.keygen(lambda, key_rng);
        AdversaryView view;
        view.scheme = &scheme;
        view.pk_view = scheme.public_view(kp.pk);
        view.aux = scheme.aux_public;
        view.enc_oracle = [&scheme, pk = kp.pk](const Value& m, Rng& rng) {
            return scheme.encrypt(pk, m, rng);
        };
        if (opts.expose_sk_for_tests) view.whitebox_sk = kp.sk;

        Choice ch = adv.choose(view, adv_rng);
        validate_pair(scheme, ch.m0, ch.m1);
        int b = bit_rng.bit();
        Value c = scheme.encrypt(kp.pk, b ? ch.m1 : ch.m0, enc_rng);
        Guess g = adv.guess(view, ch.state, c, adv_rng);
        int answer = g.bit ? *g.bit : score_rng.bit();
        if (!g.bit) ++r.abstentions;
        if (answer == b) ++r.wins;
    }
    return finish(r);
}

GameReport run_bridge_indcpa(const Bridge& b, const Adversary& adv, std::uint64_t trials,
                             std::uint64_t seed, const IndcpaOptions& opts) {
    require(trials >= 1, Errc::InvalidParams, "trials must be >= 1");
    const SecurityParameter lambda;

    GameReport r;
    r.game = "bridge-indcpa";
    r.participants = {b.id, adv.name};
    r.trials = trials;
    r.seed = seed;
    r.delta = opts.delta;
    for (const auto& f : opts.flags) r.flags[f] = true;
    if (b.gentry && b.gentry->key_mode == KeyMode::shared)
        r.flags["circular_security_assumed"] = true;
    if (b.status == BridgeStatus::correctness_unverified)
        r.flags["correctness_unverified"] = true;

    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng key_rng = Rng::derive(seed, {t, 0});
        Rng adv_rng = Rng::derive(seed, {t, 1});
        Rng bit_rng = Rng::derive(seed, {t, 2});
        Rng enc_rng = Rng::derive(seed, {t, 3});
        Rng score_rng = Rng::derive(seed, {t, 4});

        KeyBundle kb = b.keygen(lambda, key_rng);
        Scheme game_scheme =
            augment(b.source, {b.target.public_view(kb.pk2), kb.bk});

        AdversaryView view;
        view.scheme = &game_scheme;
        view.pk_view = game_scheme.public_view(kb.pk1);
        view.aux = game_scheme.aux_public;
        view.enc_oracle = [&game_scheme, pk = kb.pk1](const Value& m, Rng& rng) {
            return game_scheme.encrypt(pk, m, rng);
        };
        if (opts.expose_sk_for_tests) view.whitebox_sk = kb.sk1;

        Choice ch = adv.choose(view, adv_rng);
        validate_pair(game_scheme, ch.m0, ch.m1);
        int bit = bit_rng.bit();
        Value c = game_scheme.encrypt(kb.pk1, bit ? ch.m1 : ch.m0, enc_rng);
        Guess g = adv.guess(view, ch.state, c, adv_rng);
        int answer = g.bit ? *g.bit : score_rng.bit();
        if (!g.bit) ++r.abstentions;
        if (answer == bit) ++r.wins;
    }
    return finish(r);
}

namespace {

void check_shape(const Value& a, const Value& b) {
    require(a.tag() == b.tag() && a.is_leaf() == b.is_leaf() &&
                a.flat_words().size() == b.flat_words().size(),
            Errc::ShapeMismatch, "samplers emit different shapes");
}

} // namespace

GameReport run_distinguisher(const ValueSampler& a, const ValueSampler& b,
                             const Distinguisher& d, std::uint64_t trials,
                             std::uint64_t seed, double delta) {
    require(trials >= 1, Errc::InvalidParams, "trials must be >= 1");
    {
        Rng ra = Rng::derive(seed, {999, 0});
        Rng rb = Rng::derive(seed, {999, 1});
        check_shape(a(ra), b(rb));
    }

    GameReport r;
    r.game = "distinguish";
    r.trials = trials;
    r.seed = seed;
    r.delta = delta;
    r.flags["heuristic_only"] = true;

    std::uint64_t ones_a = 0, n_a = 0, ones_b = 0, n_b = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng side_rng = Rng::derive(seed, {t, 0});
        Rng sample_rng = Rng::derive(seed, {t, 1});
        int side_is_a = side_rng.bit();
        Value x = side_is_a ? a(sample_rng) : b(sample_rng);
        int out = d(x) ? 1 : 0;
        if (side_is_a) {
            ++n_a;
            ones_a += out;
        } else {
            ++n_b;
            ones_b += out;
        }
        if (out == side_is_a) ++r.wins;
    }
    double pa = n_a ? static_cast<double>(ones_a) / static_cast<double>(n_a) : 0.0;
    double pb = n_b ? static_cast<double>(ones_b) / static_cast<double>(n_b) : 0.0;
    r.advantage = std::abs(pa - pb);
    r.ci_halfwidth = hoeffding_halfwidth(trials, delta);
    return r;
}

// --- adversaries ---------------------------------------------------------------

Adversary random_guess_adversary() {
    Adversary a;
    a.name = "random-guess";
    a.choose = [](const AdversaryView& v, Rng&) {
        return Choice{v.scheme->plaintext.at(0), v.scheme->plaintext.at(1), Value::none()};
    };
    a.guess = [](const AdversaryView&, const Value&, const Value&, Rng& rng) {
        return Guess{rng.bit()};
    };
    return a;
}

Adversary plaintext_reader_adversary() {
    Adversary a;
    a.name = "plaintext-reader";
    a.choose = [](const AdversaryView& v, Rng&) {
        Value m0 = v.scheme->plaintext.at(0);
        Value m1 = v.scheme->plaintext.at(1);
        return Choice{m0, m1, Value::tuple("state", {m0, m1})};
    };
    a.guess = [](const AdversaryView&, const Value& st, const Value& c, Rng&) {
        if (c.flat_words() == st.part(0).flat_words()) return Guess{0};
        if (c.flat_words() == st.part(1).flat_words()) return Guess{1};
        return Guess{std::nullopt};
    };
    return a;
}

Adversary omniscient_adversary() {
    Adversary a;
    a.name = "omniscient";
    a.choose = [](const AdversaryView& v, Rng&) {
        Value m0 = v.scheme->plaintext.at(0);
        Value m1 = v.scheme->plaintext.at(1);
        return Choice{m0, m1, Value::tuple("state", {m0, m1})};
    };
    a.guess = [](const AdversaryView& v, const Value& st, const Value& c, Rng&) {
        if (!v.whitebox_sk) return Guess{std::nullopt};
        Value m = v.scheme->decrypt(*v.whitebox_sk, c);
        if (m == st.part(0)) return Guess{0};
        if (m == st.part(1)) return Guess{1};
        return Guess{std::nullopt};
    };
    return a;
}

Adversary halfkey_attacker(const Scheme& base) {
    Adversary a;
    a.name = "reassembly";
    const Scheme scheme = base;
    const std::size_t e = base.sk_bits;

    a.choose = [](const AdversaryView& v, Rng&) {
        Value m0 = v.scheme->plaintext.at(0);
        Value m1 = v.scheme->plaintext.at(1);
        return Choice{m0, m1, Value::tuple("state", {m0, m1})};
    };
    a.guess = [scheme, e](const AdversaryView& v, const Value& st, const Value& challenge,
                          Rng&) -> Guess {
        // Look for a composite bridge key: a 3-tuple whose first and third
        // parts are bit leaves of e/2 words each.
        const std::size_t half = e / 2;
        auto is_half = [half](const Value& x) {
            if (!x.is_leaf() || x.words().size() != half) return false;
            for (u64 w : x.words())
                if (w > 1) return false;
            return true;
        };
        std::optional<std::vector<u8>> bits;
        auto scan = [&](const Value& cand) {
            if (cand.is_leaf() || cand.size() != 3) return;
            if (is_half(cand.part(0)) && is_half(cand.part(2))) {
                std::vector<u8> b;
                for (u64 w : cand.part(0).words()) b.push_back(static_cast<u8>(w));
                for (u64 w : cand.part(2).words()) b.push_back(static_cast<u8>(w));
                bits = b;
            }
        };
        for (const Value& x : v.aux) scan(x);
        if (!bits && !v.pk_view.is_leaf())
            for (const Value& x : v.pk_view.parts()) scan(x);
        if (!bits) return Guess{std::nullopt}; // missing key half: abstain

        Value sk = scheme.sk_from_bits(*bits);
        // Graph-scheme challenges are pairs; read the source component.
        const Value& c = challenge.is_leaf() ? challenge : challenge.part(0);
        Value m = scheme.decrypt(sk, c);
        if (m.words() == st.part(0).words()) return Guess{0};
        if (m.words() == st.part(1).words()) return Guess{1};
        return Guess{std::nullopt};
    };
    return a;
}

} // namespace bridgelab
