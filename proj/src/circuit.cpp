#include "bridgelab/circuit.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bridgelab {

void BooleanCircuit::validate() const {
    std::uint32_t wires = inputs;
    for (const Gate& g : gates) {
        if (g.op == GateOp::Xor || g.op == GateOp::And) {
            require(g.a < wires && g.b < wires, Errc::ParseError,
                    "gate references a later or missing wire");
        }
        ++wires;
    }
    require(!outputs.empty(), Errc::ParseError, "circuit has no outputs");
    for (std::uint32_t o : outputs)
        require(o < wires, Errc::ParseError, "output references a missing wire");
}

std::uint32_t BooleanCircuit::depth() const {
    std::vector<std::uint32_t> d(wire_count(), 0);
    for (std::size_t g = 0; g < gates.size(); ++g) {
        const Gate& gate = gates[g];
        std::uint32_t w = inputs + static_cast<std::uint32_t>(g);
        if (gate.op == GateOp::Xor || gate.op == GateOp::And)
            d[w] = 1 + std::max(d[gate.a], d[gate.b]);
    }
    std::uint32_t m = 0;
    for (std::uint32_t o : outputs) m = std::max(m, d[o]);
    return m;
}

std::vector<u8> eval_boolean(const BooleanCircuit& c, std::span<const u8> bits) {
    require(bits.size() == c.inputs, Errc::ArityMismatch,
            "circuit expects " + std::to_string(c.inputs) + " inputs, got " +
                std::to_string(bits.size()));
    std::vector<u8> w(c.wire_count());
    std::copy(bits.begin(), bits.end(), w.begin());
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        const Gate& gate = c.gates[g];
        u8 v = 0;
        switch (gate.op) {
            case GateOp::Xor: v = w[gate.a] ^ w[gate.b]; break;
            case GateOp::And: v = w[gate.a] & w[gate.b]; break;
            case GateOp::Const0: v = 0; break;
            case GateOp::Const1: v = 1; break;
        }
        w[c.inputs + g] = v;
    }
    std::vector<u8> out;
    out.reserve(c.outputs.size());
    for (std::uint32_t o : c.outputs) out.push_back(w[o]);
    return out;
}

u8 eval_boolean1(const BooleanCircuit& c, std::span<const u8> bits) {
    return eval_boolean(c, bits).at(0);
}

// --- builder ---------------------------------------------------------------

std::uint32_t CircuitBuilder::input(std::uint32_t i) const {
    require(i < c_.inputs, Errc::ArityMismatch, "input index out of range");
    return i;
}

std::uint32_t CircuitBuilder::emit(GateOp op, std::uint32_t a, std::uint32_t b) {
    std::uint64_t key = (static_cast<std::uint64_t>(op) << 60) |
                        (static_cast<std::uint64_t>(a) << 30) | b;
    for (const auto& [k, w] : cse_)
        if (k == key) return w;
    c_.gates.push_back(Gate{op, a, b});
    std::uint32_t w = c_.inputs + static_cast<std::uint32_t>(c_.gates.size()) - 1;
    cse_.emplace_back(key, w);
    return w;
}

std::uint32_t CircuitBuilder::constant(bool one) {
    return emit(one ? GateOp::Const1 : GateOp::Const0, 0, 0);
}

std::uint32_t CircuitBuilder::gate_xor(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return emit(GateOp::Xor, a, b);
}

std::uint32_t CircuitBuilder::gate_and(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return emit(GateOp::And, a, b);
}

BooleanCircuit CircuitBuilder::take() {
    c_.validate();
    return std::move(c_);
}

// --- partial application and folding ----------------------------------------

namespace {

// A wire during folding is either a known constant or an alias of a new wire.
struct Folded {
    bool is_const = false;
    u8 cval = 0;
    std::uint32_t wire = 0;
};

} // namespace

BooleanCircuit partial_apply(const BooleanCircuit& c, std::span<const u8> suffix_bits) {
    require(suffix_bits.size() <= c.inputs, Errc::ArityMismatch,
            "suffix longer than circuit arity");
    const std::uint32_t keep = c.inputs - static_cast<std::uint32_t>(suffix_bits.size());

    CircuitBuilder b(keep);
    std::vector<Folded> map(c.wire_count());
    for (std::uint32_t i = 0; i < keep; ++i) map[i] = Folded{false, 0, i};
    for (std::size_t i = 0; i < suffix_bits.size(); ++i)
        map[keep + i] = Folded{true, static_cast<u8>(suffix_bits[i] & 1), 0};

    auto materialize = [&](const Folded& f) -> std::uint32_t {
        return f.is_const ? b.constant(f.cval != 0) : f.wire;
    };

    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        const Gate& gate = c.gates[g];
        std::uint32_t w = c.inputs + static_cast<std::uint32_t>(g);
        switch (gate.op) {
            case GateOp::Const0: map[w] = Folded{true, 0, 0}; break;
            case GateOp::Const1: map[w] = Folded{true, 1, 0}; break;
            case GateOp::Xor: {
                Folded x = map[gate.a], y = map[gate.b];
                if (x.is_const && y.is_const) {
                    map[w] = Folded{true, static_cast<u8>(x.cval ^ y.cval), 0};
                } else if (x.is_const || y.is_const) {
                    Folded v = x.is_const ? y : x;
                    u8 k = x.is_const ? x.cval : y.cval;
                    map[w] = k ? Folded{false, 0, b.gate_not(v.wire)} : v;
                } else if (x.wire == y.wire) {
                    map[w] = Folded{true, 0, 0};
                } else {
                    map[w] = Folded{false, 0, b.gate_xor(x.wire, y.wire)};
                }
                break;
            }
            case GateOp::And: {
                Folded x = map[gate.a], y = map[gate.b];
                if (x.is_const && y.is_const) {
                    map[w] = Folded{true, static_cast<u8>(x.cval & y.cval), 0};
                } else if (x.is_const || y.is_const) {
                    Folded v = x.is_const ? y : x;
                    u8 k = x.is_const ? x.cval : y.cval;
                    map[w] = k ? v : Folded{true, 0, 0};
                } else if (x.wire == y.wire) {
                    map[w] = x;
                } else {
                    map[w] = Folded{false, 0, b.gate_and(x.wire, y.wire)};
                }
                break;
            }
        }
    }

    std::vector<std::uint32_t> outs;
    outs.reserve(c.outputs.size());
    for (std::uint32_t o : c.outputs) outs.push_back(materialize(map[o]));
    b.set_outputs(std::move(outs));
    return b.take();
}

BooleanCircuit compose_circuits(const BooleanCircuit& outer,
                                std::span<const BooleanCircuit> inner) {
    require(inner.size() == outer.inputs, Errc::ArityMismatch,
            "outer circuit arity does not match the number of inner circuits");
    require(!inner.empty(), Errc::ArityMismatch, "no inner circuits");
    const std::uint32_t arity = inner[0].inputs;
    for (const BooleanCircuit& ic : inner) {
        require(ic.inputs == arity, Errc::ArityMismatch,
                "inner circuits must share one input vector");
        require(ic.outputs.size() == 1, Errc::ArityMismatch,
                "inner circuits must be single-output");
    }

    BooleanCircuit r;
    r.inputs = arity;
    std::vector<std::uint32_t> feeds(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
        const BooleanCircuit& ic = inner[i];
        const std::uint32_t offset = r.wire_count() - arity; // gate offset
        for (const Gate& g : ic.gates) {
            Gate ng = g;
            if (g.op == GateOp::Xor || g.op == GateOp::And) {
                ng.a = g.a < arity ? g.a : g.a + offset;
                ng.b = g.b < arity ? g.b : g.b + offset;
            }
            r.gates.push_back(ng);
        }
        std::uint32_t o = ic.outputs[0];
        feeds[i] = o < arity ? o : o + offset;
    }
    const std::uint32_t offset = r.wire_count() - outer.inputs;
    for (const Gate& g : outer.gates) {
        Gate ng = g;
        if (g.op == GateOp::Xor || g.op == GateOp::And) {
            ng.a = g.a < outer.inputs ? feeds[g.a] : g.a + offset;
            ng.b = g.b < outer.inputs ? feeds[g.b] : g.b + offset;
        }
        r.gates.push_back(ng);
    }
    for (std::uint32_t o : outer.outputs)
        r.outputs.push_back(o < outer.inputs ? feeds[o] : o + offset);
    r.validate();
    return r;
}

// --- synthesis ---------------------------------------------------------------

namespace {

// Packs a bit table into words for use as a memo key.
std::vector<u64> pack_bits(std::span<const u8> bits) {
    std::vector<u64> out((bits.size() + 63) / 64 + 1);
    out[0] = bits.size();
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out[1 + i / 64] |= u64{1} << (i % 64);
    return out;
}

struct Synth {
    CircuitBuilder& b;
    std::map<std::vector<u64>, std::uint32_t> memo;

    // Synthesizes the subfunction on variables [0, v) given by `table`
    // (size 2^v). Expansion on the top variable: f = f0 XOR x_{v-1} AND (f0 XOR f1).
    std::uint32_t build(std::span<const u8> table, std::size_t v) {
        bool all0 = true, all1 = true;
        for (u8 t : table) {
            all0 &= (t == 0);
            all1 &= (t != 0);
        }
        if (all0) return b.constant(false);
        if (all1) return b.constant(true);

        auto key = pack_bits(table);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        const std::size_t half = table.size() / 2;
        std::uint32_t w;
        std::uint32_t x = b.input(static_cast<std::uint32_t>(v - 1));
        std::span<const u8> lo = table.subspan(0, half);
        std::span<const u8> hi = table.subspan(half, half);
        if (std::equal(lo.begin(), lo.end(), hi.begin())) {
            w = build(lo, v - 1);
        } else {
            std::uint32_t f0 = build(lo, v - 1);
            std::uint32_t f1 = build(hi, v - 1);
            std::uint32_t d = b.gate_xor(f0, f1);
            std::uint32_t a = b.gate_and(x, d);
            w = b.gate_xor(f0, a);
        }
        memo.emplace(std::move(key), w);
        return w;
    }
};

} // namespace

BooleanCircuit synthesize_from_truth_table(std::size_t arity,
                                           std::span<const std::vector<u8>> tables) {
    require(arity <= 20, Errc::InvalidParams, "truth-table synthesis capped at 20 inputs");
    require(!tables.empty(), Errc::InvalidParams, "no output tables");
    const std::size_t rows = std::size_t{1} << arity;
    for (const auto& t : tables)
        require(t.size() == rows, Errc::InvalidParams, "truth table size mismatch");

    CircuitBuilder b(static_cast<std::uint32_t>(arity));
    Synth s{b, {}};
    std::vector<std::uint32_t> outs;
    outs.reserve(tables.size());
    for (const auto& t : tables) outs.push_back(s.build(t, arity));
    b.set_outputs(std::move(outs));
    return b.take();
}

std::vector<u8> truth_table(const BooleanCircuit& c, std::size_t output_index) {
    require(c.inputs <= 20, Errc::InvalidParams, "truth table capped at 20 inputs");
    const std::size_t rows = std::size_t{1} << c.inputs;
    std::vector<u8> table(rows);
    std::vector<u8> bits(c.inputs);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < c.inputs; ++i) bits[i] = (r >> i) & 1u;
        table[r] = eval_boolean(c, bits).at(output_index);
    }
    return table;
}

BooleanCircuit identity_circuit(std::uint32_t arity) {
    BooleanCircuit c;
    c.inputs = arity;
    for (std::uint32_t i = 0; i < arity; ++i) c.outputs.push_back(i);
    c.validate();
    return c;
}

BooleanCircuit random_circuit(std::uint32_t arity, std::uint32_t n_gates, Rng& rng,
                              std::uint32_t n_outputs) {
    BooleanCircuit c;
    c.inputs = arity;
    for (std::uint32_t g = 0; g < n_gates; ++g) {
        std::uint32_t wires = c.wire_count();
        Gate gate;
        gate.op = rng.bit() ? GateOp::Xor : GateOp::And;
        gate.a = static_cast<std::uint32_t>(rng.below(wires));
        gate.b = static_cast<std::uint32_t>(rng.below(wires));
        c.gates.push_back(gate);
    }
    std::uint32_t wires = c.wire_count();
    for (std::uint32_t o = 0; o < n_outputs; ++o)
        c.outputs.push_back(wires - 1 - static_cast<std::uint32_t>(rng.below(std::min(wires, n_gates + 1))));
    c.validate();
    return c;
}

// --- arithmetization ----------------------------------------------------------

RingCircuit arithmetize(const BooleanCircuit& c) {
    c.validate();
    return RingCircuit{c};
}

std::vector<u64> eval_ring(const RingCircuit& rc, const PlainRing& ring,
                           std::span<const u64> inputs, bool literal_equality_test) {
    const BooleanCircuit& c = rc.source;
    require(inputs.size() == c.inputs, Errc::ArityMismatch, "ring evaluation arity mismatch");
    std::vector<u64> w(c.wire_count());
    for (std::size_t i = 0; i < inputs.size(); ++i) w[i] = ring.reduce(inputs[i]);
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        const Gate& gate = c.gates[g];
        u64 v = 0;
        switch (gate.op) {
            case GateOp::Xor: v = ring.lift_xor(w[gate.a], w[gate.b]); break;
            case GateOp::And: v = ring.mul(w[gate.a], w[gate.b]); break;
            case GateOp::Const0: v = ring.reduce(0); break;
            case GateOp::Const1: v = ring.reduce(1); break;
        }
        w[c.inputs + g] = v;
    }
    std::vector<u64> out;
    out.reserve(c.outputs.size());
    for (std::uint32_t o : c.outputs) {
        u64 v = w[o];
        if (literal_equality_test) v = (v == ring.reduce(1)) ? 1 : 0;
        out.push_back(v);
    }
    return out;
}

// --- serialization -------------------------------------------------------------

std::string circuit_to_text(const BooleanCircuit& c) {
    std::ostringstream os;
    os << "inputs " << c.inputs << "\n";
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        const Gate& gate = c.gates[g];
        os << "g" << (c.inputs + g) << " = ";
        switch (gate.op) {
            case GateOp::Xor: os << "XOR g" << gate.a << " g" << gate.b; break;
            case GateOp::And: os << "AND g" << gate.a << " g" << gate.b; break;
            case GateOp::Const0: os << "CONST0"; break;
            case GateOp::Const1: os << "CONST1"; break;
        }
        os << "\n";
    }
    os << "outputs";
    for (std::uint32_t o : c.outputs) os << " g" << o;
    os << "\n";
    return os.str();
}

namespace {

std::uint32_t parse_wire(const std::string& tok) {
    require(tok.size() >= 2 && tok[0] == 'g', Errc::ParseError, "bad wire token: " + tok);
    return static_cast<std::uint32_t>(std::stoul(tok.substr(1)));
}

} // namespace

BooleanCircuit circuit_from_text(const std::string& text) {
    BooleanCircuit c;
    std::istringstream is(text);
    std::string line;
    bool have_inputs = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok.empty() || tok[0] == '#') continue;
        if (tok == "inputs") {
            require(static_cast<bool>(ls >> c.inputs), Errc::ParseError, "missing input count");
            have_inputs = true;
        } else if (tok == "outputs") {
            std::string w;
            while (ls >> w) c.outputs.push_back(parse_wire(w));
        } else {
            require(have_inputs, Errc::ParseError, "gate before 'inputs' line");
            std::uint32_t lhs = parse_wire(tok);
            require(lhs == c.wire_count(), Errc::ParseError,
                    "gates must be declared in wire order");
            std::string eq, op;
            require(static_cast<bool>(ls >> eq >> op) && eq == "=", Errc::ParseError, "expected eq in " + line);
            Gate g{};
            std::string a, b;
            if (op == "XOR" || op == "AND" || op == "OR") {
                require(static_cast<bool>(ls >> a >> b), Errc::ParseError, "binary gate needs two args");
                g.a = parse_wire(a);
                g.b = parse_wire(b);
                if (op == "OR") {
                    // OR(a,b) = XOR(XOR(a,b), AND(a,b)); desugared at parse.
                    c.gates.push_back(Gate{GateOp::Xor, g.a, g.b});
                    std::uint32_t wx = c.wire_count() - 1;
                    c.gates.push_back(Gate{GateOp::And, g.a, g.b});
                    std::uint32_t wa = c.wire_count() - 1;
                    c.gates.push_back(Gate{GateOp::Xor, wx, wa});
                    continue;
                }
                g.op = op == "XOR" ? GateOp::Xor : GateOp::And;
            } else if (op == "NOT") {
                require(static_cast<bool>(ls >> a), Errc::ParseError, "NOT needs one arg");
                c.gates.push_back(Gate{GateOp::Const1, 0, 0});
                g.op = GateOp::Xor;
                g.a = parse_wire(a);
                g.b = c.wire_count() - 1;
            } else if (op == "CONST0") {
                g.op = GateOp::Const0;
            } else if (op == "CONST1") {
                g.op = GateOp::Const1;
            } else {
                fail(Errc::ParseError, "unknown gate op: " + op);
            }
            c.gates.push_back(g);
        }
    }
    c.validate();
    return c;
}

std::string circuit_to_json(const BooleanCircuit& c) {
    nlohmann::ordered_json j;
    j["inputs"] = c.inputs;
    auto& gs = j["gates"] = nlohmann::ordered_json::array();
    for (const Gate& g : c.gates) {
        switch (g.op) {
            case GateOp::Xor: gs.push_back({"XOR", g.a, g.b}); break;
            case GateOp::And: gs.push_back({"AND", g.a, g.b}); break;
            case GateOp::Const0: gs.push_back({"CONST0"}); break;
            case GateOp::Const1: gs.push_back({"CONST1"}); break;
        }
    }
    j["outputs"] = c.outputs;
    return j.dump();
}

BooleanCircuit circuit_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    BooleanCircuit c;
    c.inputs = j.at("inputs").get<std::uint32_t>();
    for (const auto& g : j.at("gates")) {
        std::string op = g.at(0).get<std::string>();
        Gate gate{};
        if (op == "XOR" || op == "AND") {
            gate.op = op == "XOR" ? GateOp::Xor : GateOp::And;
            gate.a = g.at(1).get<std::uint32_t>();
            gate.b = g.at(2).get<std::uint32_t>();
        } else if (op == "CONST0") {
            gate.op = GateOp::Const0;
        } else if (op == "CONST1") {
            gate.op = GateOp::Const1;
        } else {
            fail(Errc::ParseError, "unknown gate op: " + op);
        }
        c.gates.push_back(gate);
    }
    for (const auto& o : j.at("outputs")) c.outputs.push_back(o.get<std::uint32_t>());
    c.validate();
    return c;
}

} // namespace bridgelab
