#include "cycdim/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "cycdim/matrices.hpp"

namespace cycdim {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- validation -------------------------------------------------------------

bool one_of(const std::string& v, std::initializer_list<const char*> options) {
    for (const char* o : options)
        if (v == o) return true;
    return false;
}

// Empty string means the configuration is acceptable.
std::string validate(const RunConfig& c) {
    if (!one_of(c.command, {"table", "verify", "compare"}))
        return "unknown command '" + c.command + "'";
    if (!is_odd_prime(c.p))
        return "--p must be an odd prime, got " + std::to_string(c.p);
    if (c.g_min < 1)
        return "genus range must start at 1 or above";
    if (c.g_max < c.g_min)
        return "empty genus range: gmin " + std::to_string(c.g_min) + " > gmax " +
               std::to_string(c.g_max);
    if (!one_of(c.what, {"gow", "tqft", "all"}))
        return "--what must be gow, tqft or all";
    if (!one_of(c.mode, {"exact", "float", "both"}))
        return "--mode must be exact, float or both";
    if (!one_of(c.format, {"text", "csv", "json"}))
        return "--format must be text, csv or json";
    if (c.command == "table" && c.p == 3 && c.what != "gow")
        return "p = 3 supports only --what gow (the TQFT side needs p >= 5)";
    if (c.command == "compare" && c.p == 3)
        return "compare needs p >= 5 (the TQFT side is undefined at p = 3)";
    bool uses_float = (c.command == "verify") ||
                      (c.command == "table" && c.mode != "exact");
    if (uses_float && c.g_max > kFloatGenusLimit)
        return "floating-point routes are limited to g <= " +
               std::to_string(kFloatGenusLimit) + " (dynamic-range guard)";
    return "";
}

// ---- table ------------------------------------------------------------------

ordered_json config_json(const RunConfig& c) {
    return ordered_json{{"command", c.command}, {"p", c.p},       {"g_min", c.g_min},
                        {"g_max", c.g_max},     {"what", c.what}, {"mode", c.mode},
                        {"format", c.format}};
}

std::string render_table_text(const std::vector<DimRecord>& rows) {
    std::vector<std::array<std::string, 8>> cells;
    cells.push_back({"p", "g", "kind", "index", "route", "value", "residual", "match"});
    for (const auto& r : rows) {
        cells.push_back({std::to_string(r.p), std::to_string(r.g), r.index_kind,
                         std::to_string(r.index), r.route, r.value.get_str(),
                         r.residual ? format_double(*r.residual) : "",
                         r.match ? yes_no(*r.match) : ""});
    }
    std::array<size_t, 8> width{};
    for (const auto& row : cells)
        for (size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            std::string cell = row[i];
            cell.resize(width[i], ' ');
            line += cell;
            if (i + 1 < row.size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

std::string render_table_csv(const std::vector<DimRecord>& rows) {
    std::ostringstream os;
    os << "p,g,index_kind,index,route,value,residual,match\n";
    for (const auto& r : rows) {
        os << r.p << ',' << r.g << ',' << r.index_kind << ',' << r.index << ',' << r.route
           << ',' << r.value.get_str() << ','
           << (r.residual ? format_double(*r.residual) : "") << ','
           << (r.match ? yes_no(*r.match) : "") << "\n";
    }
    return os.str();
}

std::string render_table_json(const RunConfig& config, const std::vector<DimRecord>& rows) {
    ordered_json doc;
    doc["config"] = config_json(config);
    doc["rows"] = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row{{"p", r.p},         {"g", r.g},
                         {"index_kind", r.index_kind}, {"index", r.index},
                         {"route", r.route}, {"value", r.value.get_str()}};
        row["residual"] = r.residual ? ordered_json(*r.residual) : ordered_json(nullptr);
        row["match"] = r.match ? ordered_json(*r.match) : ordered_json(nullptr);
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

} // namespace

std::vector<DimRecord> build_table(const RunConfig& config) {
    const long p = config.p;
    const bool want_exact = config.mode != "float";
    const bool want_float = config.mode != "exact";
    std::vector<DimRecord> rows;

    for (long g = config.g_min; g <= config.g_max; ++g) {
        if (config.what != "tqft") {
            BigIntMatrix power(1);
            if (want_exact)
                power = mat_pow(recursion_matrix(p), static_cast<unsigned long>(g));
            for (long n = 1; n <= p - 1; ++n) {
                std::optional<mpz_class> reference;
                if (want_exact) {
                    reference = power.at(n - 1, 0);
                    rows.push_back({p, g, "n", n, "gow_matrix", *reference,
                                    std::nullopt, std::nullopt});
                    mpz_class closed = gow_dim_exact(p, g, n);
                    rows.push_back({p, g, "n", n, "gow_exact", closed, std::nullopt,
                                    closed == *reference});
                }
                if (want_float) {
                    Rounded f = gow_dim_float(p, g, n);
                    rows.push_back({p, g, "n", n, "gow_float", f.value, f.residual,
                                    reference ? std::optional<bool>(f.value == *reference)
                                              : std::nullopt});
                }
            }
        }
        if (config.what != "gow") {
            for (long c = 0; c <= max_color_index(p); ++c) {
                std::optional<mpz_class> total, diff;
                if (want_exact) {
                    TqftDims parts = even_odd_dims(p, g, c);
                    total = parts.total;
                    diff = parts.delta;
                    rows.push_back({p, g, "c", c, "verlinde_exact", parts.total,
                                    std::nullopt, std::nullopt});
                    rows.push_back({p, g, "c", c, "delta_exact", parts.delta,
                                    std::nullopt, std::nullopt});
                    rows.push_back({p, g, "c", c, "even", parts.even, std::nullopt,
                                    std::nullopt});
                    rows.push_back({p, g, "c", c, "odd", parts.odd, std::nullopt,
                                    std::nullopt});
                }
                if (want_float) {
                    Rounded fv = verlinde_dim_float(p, g, c);
                    rows.push_back({p, g, "c", c, "verlinde_float", fv.value, fv.residual,
                                    total ? std::optional<bool>(fv.value == *total)
                                          : std::nullopt});
                    Rounded fd = delta_float(p, g, c);
                    rows.push_back({p, g, "c", c, "delta_float", fd.value, fd.residual,
                                    diff ? std::optional<bool>(fd.value == *diff)
                                         : std::nullopt});
                }
            }
        }
    }

    std::stable_sort(rows.begin(), rows.end(), [](const DimRecord& a, const DimRecord& b) {
        return std::tie(a.g, a.index_kind, a.index, a.route) <
               std::tie(b.g, b.index_kind, b.index, b.route);
    });
    return rows;
}

std::string render_table(const RunConfig& config, const std::vector<DimRecord>& rows) {
    if (config.format == "csv") return render_table_csv(rows);
    if (config.format == "json") return render_table_json(config, rows);
    return render_table_text(rows);
}

// ---- verify -------------------------------------------------------------------

namespace {

CheckRecord identity_record(long p, const IdentityCheck& c) {
    CheckRecord r{p, c.name, c.pass, std::nullopt, c.statement};
    if (!c.pass) r.detail += "; " + c.detail;
    return r;
}

std::string range_text(const RunConfig& c) {
    return "g in [" + std::to_string(c.g_min) + ", " + std::to_string(c.g_max) + "]";
}

} // namespace

std::vector<CheckRecord> build_verification(const RunConfig& config) {
    const long p = config.p;
    std::vector<CheckRecord> records;

    SMatrixReport identities = verify_s_matrix(p);
    for (const auto& c : identities.checks)
        records.push_back(identity_record(p, c));

    // Closed form vs. recursion, exact equality.
    {
        CheckRecord r{p, "gow_exact_vs_matrix", true, std::nullopt, ""};
        for (long g = config.g_min; g <= config.g_max && r.pass; ++g) {
            BigIntMatrix power = mat_pow(recursion_matrix(p), static_cast<unsigned long>(g));
            for (long n = 1; n <= p - 1; ++n) {
                mpz_class closed = gow_dim_exact(p, g, n);
                if (closed != power.at(n - 1, 0)) {
                    r.pass = false;
                    r.detail = "mismatch at g=" + std::to_string(g) + " n=" + std::to_string(n) +
                               ": closed form " + closed.get_str() + " vs recursion " +
                               power.at(n - 1, 0).get_str();
                    break;
                }
            }
        }
        if (r.pass)
            r.detail = "closed form equals recursion for " + range_text(config) +
                       ", n in 1.." + std::to_string(p - 1);
        records.push_back(std::move(r));
    }

    // Floating-point route rounds to the exact value.
    {
        CheckRecord r{p, "gow_float_rounding", true, 0.0, ""};
        for (long g = config.g_min; g <= config.g_max && r.pass; ++g) {
            BigIntMatrix power = mat_pow(recursion_matrix(p), static_cast<unsigned long>(g));
            for (long n = 1; n <= p - 1; ++n) {
                Rounded f = gow_dim_float(p, g, n);
                r.max_residual = std::max(*r.max_residual, f.residual);
                if (f.value != power.at(n - 1, 0)) {
                    r.pass = false;
                    r.detail = "wrong rounding at g=" + std::to_string(g) +
                               " n=" + std::to_string(n) + ": float route gave " +
                               f.value.get_str() + ", exact value is " +
                               power.at(n - 1, 0).get_str();
                    break;
                }
            }
        }
        if (r.pass)
            r.detail = "float route rounds to the recursion values for " + range_text(config) +
                       "; max residual " + format_double(*r.max_residual);
        records.push_back(std::move(r));
    }

    if (p >= 5) {
        // Two-route agreement for the total and for the even/odd difference.
        auto two_route = [&](const std::string& name, auto&& exact_fn, auto&& float_fn) {
            CheckRecord r{p, name, true, 0.0, ""};
            try {
                for (long g = config.g_min; g <= config.g_max && r.pass; ++g) {
                    for (long c = 0; c <= max_color_index(p); ++c) {
                        mpz_class exact = exact_fn(p, g, c);
                        Rounded f = float_fn(p, g, c);
                        r.max_residual = std::max(*r.max_residual, f.residual);
                        double bound = 1e-6 * std::max(1.0, std::abs(exact.get_d()));
                        if (f.value != exact || !(f.residual < bound)) {
                            r.pass = false;
                            r.detail = "routes disagree at g=" + std::to_string(g) +
                                       " c=" + std::to_string(c) + ": exact " + exact.get_str() +
                                       ", float " + f.value.get_str() + " (residual " +
                                       format_double(f.residual) + ")";
                            break;
                        }
                    }
                }
            } catch (const ExactnessError& e) {
                r.pass = false;
                r.detail = std::string("exactness violation: ") + e.what();
            }
            if (r.pass)
                r.detail = "exact and float routes agree for " + range_text(config) +
                           ", all colors; max residual " + format_double(*r.max_residual);
            records.push_back(std::move(r));
        };
        two_route("verlinde_route_agreement", verlinde_dim_exact, verlinde_dim_float);
        two_route("delta_route_agreement", delta_exact, delta_float);

        // Parity and nonnegativity of the even/odd split.
        {
            CheckRecord r{p, "parity_split", true, std::nullopt, ""};
            try {
                for (long g = config.g_min; g <= config.g_max && r.pass; ++g) {
                    for (long c = 0; c <= max_color_index(p); ++c) {
                        TqftDims parts = even_odd_dims(p, g, c);
                        if (parts.even + parts.odd != parts.total ||
                            parts.even - parts.odd != parts.delta) {
                            r.pass = false;
                            r.detail = "split does not recombine at g=" + std::to_string(g) +
                                       " c=" + std::to_string(c);
                            break;
                        }
                    }
                }
            } catch (const ExactnessError& e) {
                r.pass = false;
                r.detail = std::string("exactness violation: ") + e.what();
            }
            if (r.pass)
                r.detail = "even/odd split recombines with matching parity for " +
                           range_text(config) + ", all colors";
            records.push_back(std::move(r));
        }

        // Genus-one anchor values.
        {
            CheckRecord r{p, "genus_one_anchors", true, std::nullopt, ""};
            for (long c = 0; c <= max_color_index(p) && r.pass; ++c) {
                TqftDims parts = even_odd_dims(p, 1, c);
                mpz_class expected_even = (p - 1) / 2 - c;
                if (parts.even != expected_even || parts.odd != 0) {
                    r.pass = false;
                    r.detail = "anchor failed at c=" + std::to_string(c) + ": even " +
                               parts.even.get_str() + " (expected " + expected_even.get_str() +
                               "), odd " + parts.odd.get_str() + " (expected 0)";
                }
            }
            if (r.pass)
                r.detail = "genus-one split is ((p-1)/2 - c, 0) for every color";
            records.push_back(std::move(r));
        }
    }

    return records;
}

namespace {

std::string render_verification_text(const RunConfig& config,
                                     const std::vector<CheckRecord>& checks) {
    std::ostringstream os;
    os << "verification report for p=" << config.p << ", " << range_text(config);
    if (config.p == 3)
        os << " (recursion-side checks only; the TQFT side needs p >= 5)";
    os << "\n";
    size_t name_width = 0;
    for (const auto& c : checks)
        name_width = std::max(name_width, c.check.size());
    size_t failures = 0;
    for (const auto& c : checks) {
        std::string name = c.check;
        name.resize(name_width, ' ');
        os << (c.pass ? "ok   " : "FAIL ") << name << "  " << c.detail << "\n";
        if (!c.pass) ++failures;
    }
    if (failures == 0)
        os << "all " << checks.size() << " checks passed\n";
    else
        os << failures << " of " << checks.size() << " checks failed\n";
    return os.str();
}

std::string render_verification_csv(const std::vector<CheckRecord>& checks) {
    std::ostringstream os;
    os << "p,check,pass,max_residual,detail\n";
    for (const auto& c : checks) {
        os << c.p << ',' << c.check << ',' << yes_no(c.pass) << ','
           << (c.max_residual ? format_double(*c.max_residual) : "") << ','
           << csv_field(c.detail) << "\n";
    }
    return os.str();
}

std::string render_verification_json(const RunConfig& config,
                                     const std::vector<CheckRecord>& checks) {
    ordered_json doc;
    doc["config"] = config_json(config);
    doc["checks"] = ordered_json::array();
    bool all = true;
    for (const auto& c : checks) {
        ordered_json row{{"p", c.p}, {"check", c.check}, {"pass", c.pass}};
        row["max_residual"] =
            c.max_residual ? ordered_json(*c.max_residual) : ordered_json(nullptr);
        row["detail"] = c.detail;
        doc["checks"].push_back(std::move(row));
        all = all && c.pass;
    }
    doc["pass"] = all;
    return doc.dump(2) + "\n";
}

} // namespace

std::string render_verification(const RunConfig& config, const std::vector<CheckRecord>& checks) {
    if (config.format == "csv") return render_verification_csv(checks);
    if (config.format == "json") return render_verification_json(config, checks);
    return render_verification_text(config, checks);
}

// ---- compare --------------------------------------------------------------------

std::vector<TupleComparison> build_comparison(const RunConfig& config) {
    std::vector<TupleComparison> rows;
    for (long g = config.g_min; g <= config.g_max; ++g)
        rows.push_back(compare_dimension_tuples(config.p, g));
    return rows;
}

namespace {

std::string tuple_text(const std::vector<mpz_class>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i > 0) s += ", ";
        s += t[i].get_str();
    }
    return s + ")";
}

std::string render_comparison_text(const RunConfig& config,
                                   const std::vector<TupleComparison>& rows) {
    std::ostringstream os;
    os << "dimension tuples at p=" << config.p
       << " (recursion side vs TQFT side, entries n=1.." << config.p - 1 << ")\n";
    for (const auto& r : rows) {
        os << "g=" << r.g << "  gow=" << tuple_text(r.gow) << "  tqft=" << tuple_text(r.tqft)
           << "  match=" << yes_no(r.ordered_match) << "  multiset=" << yes_no(r.multiset_match)
           << "\n";
    }
    return os.str();
}

std::string render_comparison_csv(const std::vector<TupleComparison>& rows) {
    std::ostringstream os;
    os << "p,g,position,gow_value,tqft_value,entry_match,ordered_match,multiset_match\n";
    for (const auto& r : rows) {
        for (size_t i = 0; i < r.gow.size(); ++i) {
            os << r.p << ',' << r.g << ',' << i + 1 << ',' << r.gow[i].get_str() << ','
               << r.tqft[i].get_str() << ',' << yes_no(r.gow[i] == r.tqft[i]) << ','
               << yes_no(r.ordered_match) << ',' << yes_no(r.multiset_match) << "\n";
        }
    }
    return os.str();
}

std::string render_comparison_json(const RunConfig& config,
                                   const std::vector<TupleComparison>& rows) {
    ordered_json doc;
    doc["config"] = config_json(config);
    doc["rows"] = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row{{"p", r.p}, {"g", r.g}};
        auto tuple_json = [](const std::vector<mpz_class>& t) {
            ordered_json a = ordered_json::array();
            for (const auto& v : t)
                a.push_back(v.get_str());
            return a;
        };
        row["gow_tuple"] = tuple_json(r.gow);
        row["tqft_tuple"] = tuple_json(r.tqft);
        row["diffs"] = tuple_json(r.diffs);
        row["ordered_match"] = r.ordered_match;
        row["multiset_match"] = r.multiset_match;
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

} // namespace

std::string render_comparison(const RunConfig& config, const std::vector<TupleComparison>& rows) {
    if (config.format == "csv") return render_comparison_csv(rows);
    if (config.format == "json") return render_comparison_json(config, rows);
    return render_comparison_text(config, rows);
}

// ---- driver -----------------------------------------------------------------------

int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::string problem = validate(config);
    if (!problem.empty()) {
        err << "error: " << problem << "\n";
        return 2;
    }
    try {
        std::string rendered;
        int exit_code = 0;
        if (config.command == "table") {
            rendered = render_table(config, build_table(config));
        } else if (config.command == "verify") {
            std::vector<CheckRecord> checks = build_verification(config);
            rendered = render_verification(config, checks);
            for (const auto& c : checks)
                if (!c.pass) exit_code = 1;
        } else {
            rendered = render_comparison(config, build_comparison(config));
        }
        if (config.out_path.empty()) {
            out << rendered;
        } else {
            std::ofstream file(config.out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open output file '" << config.out_path << "'\n";
                return 2;
            }
            file << rendered;
            if (!file) {
                err << "error: failed writing output file '" << config.out_path << "'\n";
                return 2;
            }
        }
        return exit_code;
    } catch (const ExactnessError& e) {
        err << "exactness violation: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cycdim
