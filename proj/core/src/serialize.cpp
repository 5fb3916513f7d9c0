#include "mor/serialize.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "mor/errors.hpp"

namespace mor {

namespace {

using nlohmann::json;

json params_json(const GroupParams& params) {
    return json{{"n", params.n}, {"p", params.p}};
}

json element_json(const UTElement& elem) {
    json entries = json::array();
    for (const auto& [i, j] : root_positions(elem.params().n)) {
        const std::uint64_t v = elem.entry(i, j);
        if (v != 0) entries.push_back(json::array({i, j, v}));
    }
    return json{{"entries", std::move(entries)}};
}

json automorphism_json(const Automorphism& phi) {
    json images = json::array();
    for (const UTElement& img : phi.images()) images.push_back(element_json(img));
    return json{{"images", std::move(images)}};
}

json residue_json(const Residue& r) {
    return json{{"modulus", to_decimal(r.modulus)}, {"r", to_decimal(r.r)}};
}

std::string finish(const json& j) { return j.dump() + "\n"; }

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::uint64_t require_uint(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_unsigned()) {
        throw ParseError(std::string("missing or non-integer field \"") + field + "\"");
    }
    return j[field].get<std::uint64_t>();
}

const json& require(const json& j, const char* field) {
    if (!j.contains(field)) throw ParseError(std::string("missing field \"") + field + "\"");
    return j[field];
}

GroupParams parse_params(const json& j) {
    const std::uint64_t n = require_uint(j, "n");
    const std::uint64_t p = require_uint(j, "p");
    if (n < 3) throw ValidationError("n must be >= 3");
    if (!is_prime_u64(p)) throw ValidationError("p not prime");
    if (p == 2) throw ValidationError("p must be odd");
    return GroupParams::create(static_cast<std::size_t>(n), p);
}

UTElement parse_element_json(const json& j, const GroupParams& params) {
    const json& entries = require(j, "entries");
    if (!entries.is_array()) throw ParseError("\"entries\" must be an array");
    UTElement elem(params);
    long last_index = -1;
    std::size_t pos = 0;
    for (const json& triple : entries) {
        const std::string where = "entries[" + std::to_string(pos++) + "]";
        if (!triple.is_array() || triple.size() != 3 || !triple[0].is_number_unsigned() ||
            !triple[1].is_number_unsigned() || !triple[2].is_number_unsigned()) {
            throw ParseError(where + " must be an [i, j, value] triple of non-negative integers");
        }
        const std::uint64_t i = triple[0].get<std::uint64_t>();
        const std::uint64_t j2 = triple[1].get<std::uint64_t>();
        const std::uint64_t v = triple[2].get<std::uint64_t>();
        if (!(i >= 1 && i < j2 && j2 <= params.n)) {
            throw ValidationError(where + ": position outside the strict upper triangle");
        }
        if (v == 0) throw ValidationError(where + ": zero entries must be omitted");
        if (v >= params.p) throw ValidationError(where + ": value not reduced mod p");
        const long idx = static_cast<long>(position_index(i, j2, params.n));
        if (idx <= last_index) throw ValidationError(where + ": entries not in canonical (j-i, i) order");
        last_index = idx;
        elem.set_entry(i, j2, v);
    }
    return elem;
}

Automorphism parse_automorphism_json(const json& j, const GroupParams& params) {
    const json& images = require(j, "images");
    if (!images.is_array()) throw ParseError("\"images\" must be an array");
    if (images.size() != params.n - 1) {
        throw ValidationError("expected " + std::to_string(params.n - 1) + " generator images, got " +
                              std::to_string(images.size()));
    }
    std::vector<UTElement> imgs;
    imgs.reserve(images.size());
    for (const json& img : images) imgs.push_back(parse_element_json(img, params));
    try {
        return Automorphism::from_images(params, std::move(imgs));
    } catch (const NonInvertibleInducedMap&) {
        throw ValidationError("not an automorphism");
    } catch (const ValidationError&) {
        throw ValidationError("not an automorphism");
    }
}

BigInt parse_big(const json& j, const char* field) {
    const json& v = require(j, field);
    if (!v.is_string()) throw ParseError(std::string("field \"") + field + "\" must be a decimal string");
    const std::string s = v.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(std::string("field \"") + field + "\" is not a decimal integer");
    }
    return bigint_from_decimal(s);
}

}  // namespace

std::string serialize_element(const UTElement& elem) { return finish(element_json(elem)); }

std::string serialize_public_key(const PublicKey& pk) {
    return finish(json{{"params", params_json(pk.params)},
                       {"phi", automorphism_json(pk.phi)},
                       {"phi_m", automorphism_json(pk.phi_m)}});
}

std::string serialize_private_key(const PrivateKey& sk) {
    return finish(json{{"params", params_json(sk.params)},
                       {"m", to_decimal(sk.m)},
                       {"order", to_decimal(sk.order)}});
}

std::string serialize_ciphertext(const Ciphertext& ct) {
    return finish(json{{"params", params_json(ct.params)},
                       {"phi_r", automorphism_json(ct.phi_r)},
                       {"masked", element_json(ct.masked)}});
}

std::string serialize_break_result(const BreakResult& result) {
    const AttackReport& rep = result.report;
    json per_factor = json::array();
    for (const PerFactorResult& pf : rep.per_factor) {
        per_factor.push_back(json{{"factor", pf.factor.coeffs()},
                                  {"multiplicity", pf.multiplicity},
                                  {"field_degree", pf.field_degree},
                                  {"residue", residue_json(pf.residue)}});
    }
    json jordan = json::array();
    for (const Residue& r : rep.jordan_residues) jordan.push_back(residue_json(r));
    json j{{"recovered", residue_json(rep.recovered)},
           {"modulus", to_decimal(rep.modulus)},
           {"per_factor", std::move(per_factor)},
           {"jordan_residues", std::move(jordan)},
           {"full_order_match", rep.full_order_match},
           {"degenerate", rep.degenerate},
           {"timings_us", json{{"reduce", rep.timings.reduce_us},
                               {"factor", rep.timings.factor_us},
                               {"dlp", rep.timings.dlp_us},
                               {"jordan", rep.timings.jordan_us},
                               {"completion", rep.timings.completion_us},
                               {"total", rep.timings.total_us}}}};
    if (rep.known_m_match) j["known_m_match"] = *rep.known_m_match;
    if (!result.plaintext_candidates.empty()) {
        json cands = json::array();
        for (const UTElement& e : result.plaintext_candidates) cands.push_back(element_json(e));
        j["plaintext_candidates"] = std::move(cands);
        json leaks = json::array();
        for (const FrattiniVector& v : result.superdiagonal_leaks) leaks.push_back(v);
        j["superdiagonal_leaks"] = std::move(leaks);
    }
    return finish(j);
}

UTElement parse_element(const std::string& text, const GroupParams& params) {
    return parse_element_json(parse_text(text), params);
}

PublicKey parse_public_key(const std::string& text) {
    const json j = parse_text(text);
    GroupParams params = parse_params(require(j, "params"));
    Automorphism phi = parse_automorphism_json(require(j, "phi"), params);
    Automorphism phi_m = parse_automorphism_json(require(j, "phi_m"), params);
    return PublicKey{params, std::move(phi), std::move(phi_m)};
}

PrivateKey parse_private_key(const std::string& text) {
    const json j = parse_text(text);
    GroupParams params = parse_params(require(j, "params"));
    BigInt m = parse_big(j, "m");
    BigInt order = parse_big(j, "order");
    if (order < 1) throw ValidationError("order must be >= 1");
    if (m < 1 || m >= order) throw ValidationError("m out of range [1, order)");
    return PrivateKey{params, std::move(m), std::move(order)};
}

Ciphertext parse_ciphertext(const std::string& text) {
    const json j = parse_text(text);
    GroupParams params = parse_params(require(j, "params"));
    Automorphism phi_r = parse_automorphism_json(require(j, "phi_r"), params);
    UTElement masked = parse_element_json(require(j, "masked"), params);
    return Ciphertext{params, std::move(phi_r), std::move(masked)};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failure on " + path);
    return content;
}

void write_text_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out) throw IoError("write failure on " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot rename " + tmp + " to " + path + ": " + ec.message());
    }
}

}  // namespace mor
