// Copyright 2026 The ulab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ulab/state_io.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ulab/errors.hpp"

namespace ulab {

namespace {

using nlohmann::json;

double parse_number(std::string_view text) {
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::Parse, "not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_number(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

Complex coherence_value(const json &v, const char *name) {
    if (v.is_number()) return v.get<double>();
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    if (v.is_object() && v.contains("re") && v.contains("im")) {
        return {v.at("re").get<double>(), v.at("im").get<double>()};
    }
    throw Error(ErrorCode::Parse, std::string(name) + " must be a number, [re, im] or {re, im}");
}

LoadedState from_x_params(const json &p) {
    if (!p.is_object()) throw Error(ErrorCode::Parse, "x_params must be an object");
    for (const char *key : {"a11", "a22", "a33", "a44", "a14", "a23"}) {
        if (!p.contains(key)) throw Error(ErrorCode::Parse, std::string("x_params missing ") + key);
    }
    for (const char *key : {"a11", "a22", "a33", "a44"}) {
        if (!p.at(key).is_number()) throw Error(ErrorCode::Parse, std::string(key) + " must be a number");
    }
    ComplexMatrix m(4);
    m(0, 0) = p.at("a11").get<double>();
    m(1, 1) = p.at("a22").get<double>();
    m(2, 2) = p.at("a33").get<double>();
    m(3, 3) = p.at("a44").get<double>();
    m(0, 3) = coherence_value(p.at("a14"), "a14");
    m(3, 0) = std::conj(m(0, 3));
    m(1, 2) = coherence_value(p.at("a23"), "a23");
    m(2, 1) = std::conj(m(1, 2));
    const CanonicalXState canonical = *canonicalize_x_state(m);
    json meta = {{"source", "x_params"}};
    if (canonical.phase_a != 0.0 || canonical.phase_b != 0.0) {
        meta["local_phases"] = {{"a", canonical.phase_a}, {"b", canonical.phase_b}};
    }
    return {x_state(canonical.params), meta};
}

}  // namespace

json state_to_json(const DensityMatrix &rho) {
    const std::size_t n = rho.dim();
    json re = json::array();
    json im = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            re_row.push_back(rho.matrix()(i, j).real());
            im_row.push_back(rho.matrix()(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"dim", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

LoadedState state_from_json(const json &doc) {
    if (!doc.is_object()) throw Error(ErrorCode::Parse, "state document must be a JSON object");
    if (doc.contains("x_params")) return from_x_params(doc.at("x_params"));
    if (!doc.contains("dim") || !doc.at("dim").is_number_integer()) {
        throw Error(ErrorCode::Parse, "missing integer field 'dim'");
    }
    const auto dim = doc.at("dim").get<std::int64_t>();
    if (dim != 2 && dim != 4 && dim != 8) throw Error(ErrorCode::InvalidState, "dimension must be 2, 4 or 8");
    const auto n = static_cast<std::size_t>(dim);
    const auto read_part = [&](const char *key, bool required) {
        std::vector<double> values(n * n, 0.0);
        if (!doc.contains(key)) {
            if (required) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
            return values;
        }
        const json &rows = doc.at(key);
        if (!rows.is_array() || rows.size() != n) {
            throw Error(ErrorCode::Parse, std::string("'") + key + "' must have " + std::to_string(n) + " rows");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != n) {
                throw Error(ErrorCode::Parse, std::string("'") + key + "' row " + std::to_string(i) +
                                                  " must have " + std::to_string(n) + " entries");
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (!rows[i][j].is_number()) throw Error(ErrorCode::Parse, std::string("'") + key + "' entries must be numbers");
                values[i * n + j] = rows[i][j].get<double>();
            }
        }
        return values;
    };
    const std::vector<double> re = read_part("re", true);
    const std::vector<double> im = read_part("im", false);
    std::vector<Complex> entries(n * n);
    for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = {re[k], im[k]};
    ComplexMatrix m(n, std::move(entries));
    if (auto problem = DensityMatrix::check(m)) throw Error(ErrorCode::InvalidState, *problem);
    return {DensityMatrix(std::move(m)), {{"source", "matrix"}}};
}

LoadedState load_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open state file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::Parse, "'" + path + "': " + e.what());
    }
    LoadedState loaded = state_from_json(doc);
    loaded.metadata["path"] = path;
    return loaded;
}

LoadedState builtin_state(std::string_view name) {
    const auto colon = name.find(':');
    const std::string_view head = name.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
    const json meta = {{"source", "builtin:" + std::string(name)}};
    const auto one_arg = [&]() {
        const std::vector<double> v = parse_number_list(args);
        if (v.size() != 1) throw Error(ErrorCode::Parse, std::string(head) + " takes one parameter");
        return v[0];
    };
    if (colon == std::string_view::npos) {
        if (head == "rho_star") return {rho_star(), meta};
        if (head == "bell_phi_plus") return {bell_state(BellKind::PhiPlus), meta};
        if (head == "bell_phi_minus") return {bell_state(BellKind::PhiMinus), meta};
        if (head == "bell_psi_plus") return {bell_state(BellKind::PsiPlus), meta};
        if (head == "bell_psi_minus") return {bell_state(BellKind::PsiMinus), meta};
        if (head == "maximally_mixed") return {maximally_mixed(), meta};
    } else {
        if (head == "werner") return {werner(one_arg()), meta};
        if (head == "chi") return {chi_state(one_arg()), meta};
        if (head == "noisy") return {noisy_star(one_arg()), meta};
        if (head == "bell_diag") {
            const std::vector<double> t = parse_number_list(args);
            if (t.size() != 3) throw Error(ErrorCode::Parse, "bell_diag takes t1,t2,t3");
            return {bell_diagonal({t[0], t[1], t[2]}), meta};
        }
    }
    throw Error(ErrorCode::Parse, "unknown builtin state '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
    return {"rho_star",        "bell_phi_plus", "bell_phi_minus", "bell_psi_plus", "bell_psi_minus",
            "maximally_mixed", "werner:p",      "chi:eps",        "noisy:p",       "bell_diag:t1,t2,t3"};
}

LoadedState resolve_state(std::string_view source) {
    constexpr std::string_view prefix = "builtin:";
    if (source.substr(0, prefix.size()) == prefix) return builtin_state(source.substr(prefix.size()));
    return load_state_file(std::string(source));
}

std::string state_fingerprint(const DensityMatrix &rho) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char ch : state_to_json(rho).dump()) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

}  // namespace ulab
