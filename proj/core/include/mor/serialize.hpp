#ifndef MOR_SERIALIZE_HPP
#define MOR_SERIALIZE_HPP

#include <string>

#include "mor/attack.hpp"
#include "mor/morsys.hpp"

namespace mor {

// Canonical JSON text: UTF-8, sorted keys, no floating point, one trailing
// newline. m and order travel as decimal strings (they may exceed 2^53);
// everything else is a plain JSON number. Element entries are emitted as
// [i, j, value] triples sorted by (j - i, i) with zeros omitted.

std::string serialize_element(const UTElement& elem);
std::string serialize_public_key(const PublicKey& pk);
std::string serialize_private_key(const PrivateKey& sk);
std::string serialize_ciphertext(const Ciphertext& ct);
std::string serialize_break_result(const BreakResult& result);

/// Parsers validate every invariant (primality, ranges, canonical entry
/// order, automorphism relations) and reject otherwise: ParseError for
/// malformed text or shapes, ValidationError for violated invariants.
UTElement parse_element(const std::string& text, const GroupParams& params);
PublicKey parse_public_key(const std::string& text);
PrivateKey parse_private_key(const std::string& text);
Ciphertext parse_ciphertext(const std::string& text);

std::string read_text_file(const std::string& path);
/// Writes to a sibling temp file and renames, so failures never leave a
/// partial output behind.
void write_text_file_atomic(const std::string& path, const std::string& content);

}  // namespace mor

#endif
