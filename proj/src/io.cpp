#include "ebchan/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <set>
#include <sstream>
#include <type_traits>
#include <variant>

#include "ebchan/errors.hpp"
#include "ebchan/random.hpp"

namespace ebchan::io {

using nlohmann::json;

std::string format_double(double value) {
    if (value == 0.0) return "0";  // also folds -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

void dump_into(std::string& out, const json& value, int indent, int depth) {
    const auto newline = [&](int level) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * level), ' ');
    };
    switch (value.type()) {
        case json::value_t::object: {
            if (value.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = value.begin(); it != value.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                dump_into(out, it.value(), indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (value.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            const bool flat = std::none_of(value.begin(), value.end(),
                                           [](const json& v) { return v.is_structured(); });
            out += '[';
            bool first = true;
            for (const auto& v : value) {
                if (!first) out += flat && indent >= 0 ? ", " : ",";
                first = false;
                if (!flat) newline(depth + 1);
                dump_into(out, v, indent, depth + 1);
            }
            if (!flat) newline(depth);
            out += ']';
            return;
        }
        case json::value_t::number_float: {
            const double d = value.get<double>();
            out += std::isfinite(d) ? format_double(d) : "null";
            return;
        }
        default:
            out += value.dump();
            return;
    }
}

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw ParseError("key '" + key + "': " + what);
}

double number_at(const json& v, const std::string& key) {
    if (!v.is_number()) fail(key, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(key, "expected a finite number");
    return d;
}

std::vector<double> number_array(const json& v, const std::string& key, std::size_t expected) {
    if (!v.is_array() || v.size() != expected) fail(key, "expected an array of " + std::to_string(expected) + " numbers");
    std::vector<double> out;
    out.reserve(expected);
    for (std::size_t i = 0; i < expected; ++i) out.push_back(number_at(v[i], key + "[" + std::to_string(i) + "]"));
    return out;
}

std::optional<std::string> parse_metadata(const json& doc) {
    if (!doc.contains("metadata")) return std::nullopt;
    const json& meta = doc.at("metadata");
    if (!meta.is_object()) fail("metadata", "expected an object");
    std::optional<std::string> name;
    for (auto it = meta.begin(); it != meta.end(); ++it) {
        if (it.key() != "name") fail("metadata." + it.key(), "unknown key");
        if (!it.value().is_string()) fail("metadata.name", "expected a string");
        name = it.value().get<std::string>();
    }
    return name;
}

void reject_unknown_keys(const json& doc, const std::set<std::string>& allowed) {
    if (!doc.is_object()) throw ParseError("expected a JSON object at top level");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!allowed.contains(it.key())) fail(it.key(), "unknown key");
}

const json& required(const json& doc, const std::string& key) {
    if (!doc.contains(key)) fail(key, "missing");
    return doc.at(key);
}

}  // namespace

std::string dump_json(const json& value, int indent) {
    std::string out;
    dump_into(out, value, indent, 0);
    return out;
}

ChannelFile parse_channel(const json& doc) {
    reject_unknown_keys(doc, {"n", "M", "metadata"});
    ChannelFile file;
    const auto n = number_array(required(doc, "n"), "n", 3);
    file.channel.n = {n[0], n[1], n[2]};
    const json& m = required(doc, "M");
    if (!m.is_array() || m.size() != 3) fail("M", "expected a 3x3 array of numbers");
    for (int i = 0; i < 3; ++i) {
        const auto row = number_array(m[static_cast<std::size_t>(i)], "M[" + std::to_string(i) + "]", 3);
        file.channel.m[i] = {row[0], row[1], row[2]};
    }
    file.name = parse_metadata(doc);
    return file;
}

ChannelFile parse_channel_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_channel(doc);
}

QuditAffineMap parse_qudit_map(const json& doc) {
    reject_unknown_keys(doc, {"d", "n", "M", "metadata"});
    const json& d = required(doc, "d");
    if (!d.is_number_integer() || d.get<long long>() < 2 || d.get<long long>() > 16) {
        fail("d", "expected an integer in [2, 16]");
    }
    QuditAffineMap map;
    map.d = static_cast<std::size_t>(d.get<long long>());
    const std::size_t size = map.size();
    map.n = number_array(required(doc, "n"), "n", size);
    const json& m = required(doc, "M");
    if (m.is_array() && m.size() == size * size) {
        map.m = number_array(m, "M", size * size);
    } else if (m.is_array() && m.size() == size) {
        for (std::size_t i = 0; i < size; ++i) {
            const auto row = number_array(m[i], "M[" + std::to_string(i) + "]", size);
            map.m.insert(map.m.end(), row.begin(), row.end());
        }
    } else {
        fail("M", "expected " + std::to_string(size * size) + " numbers (flat row-major) or a " +
                      std::to_string(size) + "x" + std::to_string(size) + " array");
    }
    parse_metadata(doc);
    return map;
}

json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json to_json(const Mat3& m) { return json::array({to_json(m[0]), to_json(m[1]), to_json(m[2])}); }

json to_json(const ComplexMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"re", std::move(re)}, {"im", std::move(im)}};
}

json to_json(const QubitChannelAffine& phi, const std::optional<std::string>& name) {
    json out{{"n", to_json(phi.n)}, {"M", to_json(phi.m)}};
    if (name) out["metadata"] = {{"name", *name}};
    return out;
}

json to_json(const QuditAffineMap& map) { return {{"d", map.d}, {"n", map.n}, {"M", map.m}}; }

json to_json(const CptpReport& report) {
    return {{"is_cp", report.is_cp}, {"min_choi_eig", report.min_choi_eig}};
}

json to_json(const CanonicalDecomposition& canonical) {
    return {{"lambda", to_json(canonical.lambda)},
            {"n", to_json(canonical.n)},
            {"r_pre", to_json(canonical.r_pre)},
            {"r_post", to_json(canonical.r_post)}};
}

json to_json(const EBVerdict& verdict) {
    return {{"is_eb", verdict.is_eb},
            {"margin", verdict.margin},
            {"choi_min_eig", verdict.choi_min_eig},
            {"method", to_string(verdict.method)}};
}

json to_json(const AmendmentReport& report) {
    json unitaries = json::array();
    for (const auto& u : report.best_unitaries) unitaries.push_back({{"axis", to_json(u.axis)}, {"angle", u.angle}});
    return {{"base_channel", to_json(report.base_channel)},
            {"n_layers", report.n_layers},
            {"trials", report.trials},
            {"seed", report.seed},
            {"prng", kPrngId},
            {"best_margin", report.best_margin},
            {"best_trial", report.best_trial},
            {"best_unitaries", std::move(unitaries)},
            {"amended", report.amended},
            {"base_is_eb", report.base_is_eb},
            {"base_margin", report.base_margin},
            {"evidence", report.evidence}};
}

json to_json(const GlobalAmendmentResult& result) {
    return {{"ordering", to_string(result.ordering)},
            {"output_state", to_json(result.output_state)},
            {"min_eig", result.min_eig},
            {"pt_spectrum", hermitian_eigenvalues(partial_transpose(result.output_state, 2, 2)).values},
            {"pt_min_eig", result.pt_min_eig},
            {"entangled", result.entangled}};
}

json to_json(const GlobalReproductionAttempt& attempt) {
    return {{"ordering", to_string(attempt.ordering)},
            {"output_state", to_json(attempt.output_state)},
            {"spectrum", hermitian_eigenvalues(attempt.output_state).values},
            {"min_eig", attempt.min_eig},
            {"is_state", attempt.is_state},
            {"pt_spectrum", hermitian_eigenvalues(partial_transpose(attempt.output_state, 2, 2)).values},
            {"pt_min_eig", attempt.pt_min_eig},
            {"max_deviation_from_published", attempt.max_deviation}};
}

json to_json(const DynamicalFamily& family) {
    json out{{"name", family_name(family)}};
    std::visit(
        [&out](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Decoherence>) {
                out["T"] = f.time_constant;
                out["omega"] = f.omega;
            } else if constexpr (std::is_same_v<F, Depolarization>) {
                out["T"] = f.time_constant;
            } else {
                out["T1"] = f.decay_time;
                out["T2"] = f.decoherence_time;
                out["w"] = f.purity;
                out["omega"] = f.omega;
            }
        },
        family);
    return out;
}

json to_json(const TimeScan& scan, const std::optional<double>& onset) {
    json rows = json::array();
    for (const auto& row : scan.rows) {
        json r{{"t", row.t}, {"lambda", to_json(row.lambda_abs)}, {"margin", row.margin}, {"is_eb", row.is_eb}};
        if (row.f) {
            r["f1"] = row.f->f1;
            r["f2"] = row.f->f2;
            r["f"] = row.f->f;
        }
        if (row.thm3_eb) r["thm3_eb"] = *row.thm3_eb;
        rows.push_back(std::move(r));
    }
    return {{"family", to_json(scan.family)},
            {"onset", onset ? json(*onset) : json(nullptr)},
            {"rows", std::move(rows)}};
}

void write_scan_csv(std::ostream& out, const TimeScan& scan) {
    const bool homogenization = std::holds_alternative<Homogenization>(scan.family);
    out << "t,lam1,lam2,lam3,margin,is_eb";
    if (homogenization) out << ",f1,f2,f,thm3_eb";
    out << '\n';
    for (const auto& row : scan.rows) {
        out << format_double(row.t) << ',' << format_double(row.lambda_abs[0]) << ','
            << format_double(row.lambda_abs[1]) << ',' << format_double(row.lambda_abs[2]) << ','
            << format_double(row.margin) << ',' << (row.is_eb ? 1 : 0);
        if (homogenization) {
            out << ',' << format_double(row.f->f1) << ',' << format_double(row.f->f2) << ','
                << format_double(row.f->f) << ',' << (*row.thm3_eb ? 1 : 0);
        }
        out << '\n';
    }
}

}  // namespace ebchan::io
