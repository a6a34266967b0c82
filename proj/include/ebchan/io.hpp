#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "ebchan/amend.hpp"
#include "ebchan/channel.hpp"
#include "ebchan/ebtest.hpp"
#include "ebchan/markov.hpp"

namespace ebchan::io {

/// 17 significant digits, shortest form (trailing zeros dropped), always with
/// a dot decimal separator regardless of locale.
std::string format_double(double value);

/// Serializes with format_double for every number. Non-finite numbers are
/// written as null.
std::string dump_json(const nlohmann::json& value, int indent = 2);

/// {"n": [3], "M": [[3] x 3], "metadata": {"name": string}?}; no other keys.
struct ChannelFile {
    QubitChannelAffine channel;
    std::optional<std::string> name;
};

/// Throws ParseError naming the offending key.
ChannelFile parse_channel(const nlohmann::json& doc);
ChannelFile parse_channel_text(const std::string& text);

/// {"d": int, "n": [d^2-1], "M": flat row-major [(d^2-1)^2] or nested,
///  "metadata": {...}?}. Throws ParseError.
QuditAffineMap parse_qudit_map(const nlohmann::json& doc);

nlohmann::json to_json(const Vec3& v);
nlohmann::json to_json(const Mat3& m);
/// {"re": [[...]], "im": [[...]]}
nlohmann::json to_json(const ComplexMatrix& m);
nlohmann::json to_json(const QubitChannelAffine& phi, const std::optional<std::string>& name = std::nullopt);
nlohmann::json to_json(const QuditAffineMap& map);
nlohmann::json to_json(const CptpReport& report);
nlohmann::json to_json(const CanonicalDecomposition& canonical);
nlohmann::json to_json(const EBVerdict& verdict);
nlohmann::json to_json(const AmendmentReport& report);
nlohmann::json to_json(const GlobalAmendmentResult& result);
nlohmann::json to_json(const GlobalReproductionAttempt& attempt);
nlohmann::json to_json(const DynamicalFamily& family);
nlohmann::json to_json(const TimeScan& scan, const std::optional<double>& onset);

/// Header: t,lam1,lam2,lam3,margin,is_eb[,f1,f2,f,thm3_eb]. Booleans as 0/1.
void write_scan_csv(std::ostream& out, const TimeScan& scan);

}  // namespace ebchan::io
