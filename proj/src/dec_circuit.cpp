#include "bridgelab/dec_circuit.hpp"

namespace bridgelab {

BooleanCircuit compile_decryption_circuit(const Scheme& scheme,
                                          const std::function<u8(const Value& m)>& iota_bit) {
    require(scheme.ct_bits > 0 && static_cast<bool>(scheme.ct_from_bits),
            Errc::NonEnumerableSpace,
            "scheme '" + scheme.name + "' has no ciphertext bit representation");
    require(scheme.sk_bits > 0 && static_cast<bool>(scheme.sk_from_bits),
            Errc::NonEnumerableSpace,
            "scheme '" + scheme.name + "' has no key bit representation");
    const std::size_t e = scheme.sk_bits;
    const std::size_t n = scheme.ct_bits;
    require(e + n <= 20, Errc::NonEnumerableSpace,
            "decryption circuit table would need 2^" + std::to_string(e + n) + " rows");

    const std::size_t rows = std::size_t{1} << (e + n);
    std::vector<u8> table(rows);
    std::vector<u8> kb(e), cb(n);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < e; ++i) kb[i] = (r >> i) & 1u;
        for (std::size_t i = 0; i < n; ++i) cb[i] = (r >> (e + i)) & 1u;
        Value sk = scheme.sk_from_bits(kb);
        Value c = scheme.ct_from_bits(cb);
        table[r] = iota_bit(scheme.decrypt(sk, c)) & 1u;
    }
    return synthesize_from_truth_table(e + n, std::span(&table, 1));
}

BooleanCircuit dec_circuit_for_ciphertext(const Scheme& scheme,
                                          const std::function<u8(const Value& m)>& iota_bit,
                                          const Value& c) {
    require(scheme.sk_bits > 0 && static_cast<bool>(scheme.sk_from_bits),
            Errc::NonEnumerableSpace,
            "scheme '" + scheme.name + "' has no key bit representation");
    const std::size_t e = scheme.sk_bits;
    require(e <= 16, Errc::NonEnumerableSpace,
            "key space too large for per-ciphertext synthesis");
    const std::size_t rows = std::size_t{1} << e;
    std::vector<u8> table(rows);
    std::vector<u8> kb(e);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < e; ++i) kb[i] = (r >> i) & 1u;
        table[r] = iota_bit(scheme.decrypt(scheme.sk_from_bits(kb), c)) & 1u;
    }
    return synthesize_from_truth_table(e, std::span(&table, 1));
}

} // namespace bridgelab
