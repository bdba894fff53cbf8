#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abexact/apostol.hpp"
#include "abexact/bernoulli.hpp"
#include "abexact/combinatorics.hpp"
#include "abexact/pole_form.hpp"
#include "abexact/poly.hpp"
#include "abexact/rat.hpp"
#include "abexact/serialize.hpp"
#include "abexact/verify.hpp"

namespace abexact::cli {
namespace {

using json = nlohmann::ordered_json;

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> values;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) values.push_back(Rat::parse(item));
    return values;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

/// CSV field quoting; only needed for free-form text such as suite details.
std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string label(unsigned long n, const std::string& args) {
    return "B_" + std::to_string(n) + "(" + args + ")";
}

/// First pair of names whose values differ, if any.
template <typename T>
std::optional<std::pair<std::string, std::string>> first_disagreement(
    const std::vector<std::pair<std::string, T>>& values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i].second == values[0].second)) {
            return std::make_pair(values[0].first, values[i].first);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- stirling

int run_stirling(const RunConfig& c, std::ostream& doc, std::ostream& err) {
    const unsigned long n_max = c.n_max.value();
    const StirlingTable table(n_max);
    for (unsigned long n = 0; n <= n_max; ++n) {
        for (unsigned long k = 0; k <= n; ++k) {
            if (stirling2_sum(n, k) != table.at(n, k)) {
                err << "formulas disagree at S(" << n << "," << k
                    << "): sum " << stirling2_sum(n, k).get_str() << " vs table "
                    << table.at(n, k).get_str() << "\n";
                return 1;
            }
        }
    }

    switch (c.format) {
        case Format::plain:
            for (unsigned long n = 0; n <= n_max; ++n) {
                doc << "n=" << n << ":";
                for (unsigned long k = 0; k <= n; ++k) {
                    doc << " " << table.at(n, k).get_str();
                }
                doc << "\n";
            }
            break;
        case Format::csv:
            doc << "n,k,value\n";
            for (unsigned long n = 0; n <= n_max; ++n) {
                for (unsigned long k = 0; k <= n; ++k) {
                    doc << n << "," << k << "," << table.at(n, k).get_str()
                        << "\n";
                }
            }
            break;
        case Format::json: {
            json rows = json::array();
            for (unsigned long n = 0; n <= n_max; ++n) {
                json row = json::array();
                for (unsigned long k = 0; k <= n; ++k) {
                    row.push_back(table.at(n, k).get_str());
                }
                rows.push_back(std::move(row));
            }
            json root;
            root["command"] = "stirling";
            root["n_max"] = n_max;
            root["rows"] = std::move(rows);
            doc << root.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

// -------------------------------------------------------------------- bell

int run_bell(const RunConfig& c, std::ostream& doc, std::ostream&) {
    const unsigned long n = c.n.value();
    const unsigned long k = c.k.value();
    std::vector<Rat> x;
    if (c.x) {
        x = parse_rat_list(*c.x);
    } else if (k <= n) {
        x.assign(n - k + 1, Rat(1));
    }
    const Rat value = bell_partial<Rat>(n, k, std::span<const Rat>(x));

    std::vector<std::string> xs;
    xs.reserve(x.size());
    for (const Rat& q : x) xs.push_back(q.to_string());

    switch (c.format) {
        case Format::plain:
            doc << "bell(" << n << ", " << k << "; " << join(xs, ", ")
                << ") = " << value.to_string() << "\n";
            break;
        case Format::csv:
            doc << "n,k,x,value\n"
                << n << "," << k << "," << join(xs, ";") << ","
                << value.to_string() << "\n";
            break;
        case Format::json: {
            json root;
            root["command"] = "bell";
            root["n"] = n;
            root["k"] = k;
            root["x"] = xs;
            root["value"] = value.to_string();
            doc << root.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

// --------------------------------------------------------------- bernoulli

struct NumberRow {
    unsigned long n = 0;
    std::optional<Rat> recurrence;
    std::optional<Rat> composition;
    std::optional<Rat> stirling;
    std::optional<Rat> determinant;
    std::optional<Rat> series;
    bool agree = true;
};

const std::vector<std::string> kNumberTags{"recurrence", "composition",
                                           "stirling", "determinant", "series"};

std::optional<Rat> number_by_tag(const std::string& tag, unsigned long n,
                                 const std::vector<Rat>& recurrence_table,
                                 const std::vector<Rat>& series_table) {
    if (tag == "recurrence") return recurrence_table[n];
    if (tag == "series") return series_table[n];
    if (n == 0) return std::nullopt;
    if (tag == "composition") {
        if (n > kCompositionSumMaxN) return std::nullopt;
        return bernoulli_number_composition_sum(n);
    }
    if (tag == "stirling") return bernoulli_number_stirling_sum(n);
    if (tag == "determinant") return bernoulli_number_determinant(n);
    throw std::invalid_argument("unknown formula tag: " + tag);
}

int run_bernoulli_numbers(const RunConfig& c, unsigned long lo,
                          unsigned long hi, std::ostream& doc,
                          std::ostream& err) {
    const std::vector<Rat> rec = bernoulli_recurrence_table(hi);
    const std::vector<Rat> ser = bernoulli_number_series_table(hi);

    std::vector<NumberRow> rows;
    bool all_agree = true;
    for (unsigned long n = lo; n <= hi; ++n) {
        NumberRow row;
        row.n = n;
        if (c.formula) {
            // Single-formula mode: one column, blank where undefined.
            const std::optional<Rat> v = number_by_tag(*c.formula, n, rec, ser);
            if (*c.formula == "recurrence") row.recurrence = v;
            if (*c.formula == "composition") row.composition = v;
            if (*c.formula == "stirling") row.stirling = v;
            if (*c.formula == "determinant") row.determinant = v;
            if (*c.formula == "series") row.series = v;
        } else {
            row.recurrence = number_by_tag("recurrence", n, rec, ser);
            row.composition = number_by_tag("composition", n, rec, ser);
            row.stirling = number_by_tag("stirling", n, rec, ser);
            row.determinant = number_by_tag("determinant", n, rec, ser);
            for (const auto& v :
                 {row.composition, row.stirling, row.determinant}) {
                if (v && !(*v == *row.recurrence)) row.agree = false;
            }
            if (!(ser[n] == rec[n])) row.agree = false;
            if (!row.agree) {
                all_agree = false;
                err << "formulas disagree at n=" << n << "\n";
            }
        }
        rows.push_back(std::move(row));
    }
    if (c.n && c.formula) {
        const NumberRow& only = rows.front();
        if (!only.recurrence && !only.composition && !only.stirling &&
            !only.determinant && !only.series) {
            throw std::domain_error("the " + *c.formula +
                                    " formula is not defined at n = " +
                                    std::to_string(*c.n));
        }
    }

    const auto cell = [](const std::optional<Rat>& v) {
        return v ? v->to_string() : std::string();
    };
    const auto pick = [&](const NumberRow& r) -> const std::optional<Rat>& {
        if (c.formula) {
            if (*c.formula == "composition") return r.composition;
            if (*c.formula == "stirling") return r.stirling;
            if (*c.formula == "determinant") return r.determinant;
            if (*c.formula == "series") return r.series;
        }
        return r.recurrence;
    };

    switch (c.format) {
        case Format::plain:
            for (const NumberRow& r : rows) {
                const std::optional<Rat>& v = pick(r);
                if (!v) continue;
                doc << "B_" << r.n << " = " << v->to_string() << "\n";
            }
            break;
        case Format::csv:
            if (c.formula) {
                doc << "n," << *c.formula << "\n";
                for (const NumberRow& r : rows) {
                    doc << r.n << "," << cell(pick(r)) << "\n";
                }
            } else {
                doc << "n,recurrence,composition,stirling,determinant,agree\n";
                for (const NumberRow& r : rows) {
                    doc << r.n << "," << cell(r.recurrence) << ","
                        << cell(r.composition) << "," << cell(r.stirling) << ","
                        << cell(r.determinant) << "," << bool_text(r.agree)
                        << "\n";
                }
            }
            break;
        case Format::json: {
            json jrows = json::array();
            for (const NumberRow& r : rows) {
                json jr;
                jr["n"] = r.n;
                const auto put = [&](const char* key,
                                     const std::optional<Rat>& v) {
                    jr[key] = v ? json(v->to_string()) : json(nullptr);
                };
                if (c.formula) {
                    put(c.formula->c_str(), pick(r));
                } else {
                    put("recurrence", r.recurrence);
                    put("composition", r.composition);
                    put("stirling", r.stirling);
                    put("determinant", r.determinant);
                    jr["agree"] = r.agree;
                }
                jrows.push_back(std::move(jr));
            }
            json root;
            root["command"] = "bernoulli";
            root["family"] = "numbers";
            if (c.formula) root["formula"] = *c.formula;
            root["rows"] = std::move(jrows);
            doc << root.dump(2) << "\n";
            break;
        }
    }
    return all_agree ? 0 : 1;
}

const std::vector<std::string> kPolyTags{"series", "stirling", "determinant"};

std::optional<UPolyRat> poly_by_tag(const std::string& tag, unsigned long n,
                                    const std::vector<UPolyRat>& series_table) {
    if (tag == "series") return series_table[n];
    if (n == 0) return std::nullopt;
    if (tag == "stirling") return bernoulli_poly_stirling_sum(n);
    if (tag == "determinant") return bernoulli_poly_determinant(n);
    throw std::invalid_argument("unknown polynomial formula tag: " + tag);
}

int run_bernoulli_polys(const RunConfig& c, unsigned long lo, unsigned long hi,
                        std::ostream& doc, std::ostream& err) {
    if (c.formula && *c.formula != "series" && *c.formula != "stirling" &&
        *c.formula != "determinant") {
        throw std::invalid_argument(
            "polynomial formulas are series, stirling, determinant; got " +
            *c.formula);
    }
    const std::vector<UPolyRat> ser = bernoulli_poly_series_table(hi);
    const std::optional<Rat> u =
        c.u ? std::optional<Rat>(Rat::parse(*c.u)) : std::nullopt;

    struct PolyRow {
        unsigned long n = 0;
        std::vector<std::pair<std::string, UPolyRat>> values;
        bool agree = true;
    };
    std::vector<PolyRow> rows;
    bool all_agree = true;
    for (unsigned long n = lo; n <= hi; ++n) {
        PolyRow row;
        row.n = n;
        const std::vector<std::string>& tags =
            c.formula ? std::vector<std::string>{*c.formula} : kPolyTags;
        for (const std::string& tag : tags) {
            const std::optional<UPolyRat> p = poly_by_tag(tag, n, ser);
            if (p) row.values.emplace_back(tag, *p);
        }
        if (!c.formula) {
            if (const auto bad = first_disagreement(row.values)) {
                row.agree = false;
                all_agree = false;
                err << "formulas disagree at n=" << n << ": " << bad->first
                    << " vs " << bad->second << "\n";
            }
        }
        rows.push_back(std::move(row));
    }
    if (c.n && c.formula && rows.front().values.empty()) {
        throw std::domain_error("the " + *c.formula +
                                " formula is not defined at n = " +
                                std::to_string(*c.n));
    }

    const auto value_text = [&](const UPolyRat& p) {
        return u ? p.eval(*u).to_string() : p.to_string();
    };

    switch (c.format) {
        case Format::plain:
            for (const PolyRow& r : rows) {
                if (r.values.empty()) continue;
                doc << label(r.n, u ? u->to_string() : "u") << " = "
                    << value_text(r.values.front().second) << "\n";
            }
            break;
        case Format::csv: {
            const std::vector<std::string>& tags =
                c.formula ? std::vector<std::string>{*c.formula} : kPolyTags;
            doc << "n";
            for (const std::string& tag : tags) doc << "," << tag;
            if (!c.formula) doc << ",agree";
            doc << "\n";
            for (const PolyRow& r : rows) {
                doc << r.n;
                for (const std::string& tag : tags) {
                    doc << ",";
                    for (const auto& [name, p] : r.values) {
                        if (name == tag) doc << value_text(p);
                    }
                }
                if (!c.formula) doc << "," << bool_text(r.agree);
                doc << "\n";
            }
            break;
        }
        case Format::json: {
            json jrows = json::array();
            for (const PolyRow& r : rows) {
                json jr;
                jr["n"] = r.n;
                const std::vector<std::string>& tags =
                    c.formula ? std::vector<std::string>{*c.formula} : kPolyTags;
                for (const std::string& tag : tags) {
                    json v = nullptr;
                    for (const auto& [name, p] : r.values) {
                        if (name == tag) {
                            v = u ? json(p.eval(*u).to_string())
                                  : json::parse(json_of(p));
                        }
                    }
                    jr[tag] = std::move(v);
                }
                if (!c.formula) jr["agree"] = r.agree;
                jrows.push_back(std::move(jr));
            }
            json root;
            root["command"] = "bernoulli";
            root["family"] = "polynomials";
            if (c.formula) root["formula"] = *c.formula;
            if (u) root["u"] = u->to_string();
            root["rows"] = std::move(jrows);
            doc << root.dump(2) << "\n";
            break;
        }
    }
    return all_agree ? 0 : 1;
}

int run_bernoulli(const RunConfig& c, std::ostream& doc, std::ostream& err) {
    const unsigned long lo = c.n ? *c.n : 0;
    const unsigned long hi = c.n ? *c.n : c.n_max.value();
    if (c.poly || c.u) return run_bernoulli_polys(c, lo, hi, doc, err);
    return run_bernoulli_numbers(c, lo, hi, doc, err);
}

// ----------------------------------------------------------------- apostol

const std::vector<std::string> kApostolTags{"stirling", "monomial",
                                            "determinant", "series",
                                            "bell", "quotient"};

ABPoly apostol_symbolic_by_tag(const std::string& tag, unsigned long n,
                               const std::vector<ABPoly>& series_table) {
    if (n == 0) return ABPoly();
    if (tag == "stirling") return apostol_poly_stirling_sum(n);
    if (tag == "monomial") return apostol_poly_monomial_sum(n);
    if (tag == "determinant") return apostol_poly_determinant(n - 1);
    if (tag == "series") return series_table[n];
    if (tag == "bell") return apostol_poly_via_bell(n);
    if (tag == "quotient") return apostol_poly_via_quotient(n);
    throw std::invalid_argument("unknown formula tag: " + tag);
}

Rat apostol_point_by_tag(const std::string& tag, unsigned long n, const Rat& z,
                         const Rat& u) {
    if (tag == "stirling") return apostol_eval(n, z, u, ApostolFormula::stirling);
    if (tag == "monomial") return apostol_eval(n, z, u, ApostolFormula::monomial);
    if (tag == "determinant") {
        return apostol_eval(n, z, u, ApostolFormula::determinant);
    }
    if (tag == "series") return apostol_eval(n, z, u, ApostolFormula::series);
    if (tag == "bell") return apostol_via_bell_at(n, z, u);
    if (tag == "quotient") return apostol_via_quotient_at(n, z, u);
    throw std::invalid_argument("unknown formula tag: " + tag);
}

void require_not_pole(const Rat& z) {
    if (z == Rat(1)) {
        throw std::domain_error(
            "z = 1 is the classical Bernoulli case; use the bernoulli command");
    }
}

/// Writes one coefficient row per u-power; a zero polynomial still gets
/// its constant row so every n appears.
template <typename P>
void csv_coefficient_rows(std::ostream& doc, unsigned long n, const P& p) {
    const std::size_t top = p.degree().value_or(0);
    for (std::size_t k = 0; k <= top; ++k) {
        doc << n << "," << k << "," << p.coeff(k).to_string() << "\n";
    }
}

int run_apostol(const RunConfig& c, std::ostream& doc, std::ostream& err) {
    const unsigned long lo = c.n ? *c.n : 0;
    const unsigned long hi = c.n ? *c.n : c.n_max.value();
    const std::optional<Rat> z =
        c.z ? std::optional<Rat>(Rat::parse(*c.z)) : std::nullopt;
    const std::optional<Rat> u =
        c.u ? std::optional<Rat>(Rat::parse(*c.u)) : std::nullopt;
    if (z) require_not_pole(*z);
    const std::vector<std::string> tags =
        c.formula ? std::vector<std::string>{*c.formula} : kApostolTags;
    const std::string emitted_tag = c.formula ? *c.formula : "all";

    int code = 0;
    const auto report = [&](unsigned long n, const auto& bad) {
        code = 1;
        err << "formulas disagree at n=" << n << ": " << bad->first << " vs "
            << bad->second << "\n";
    };

    // Point evaluation: both z and u fixed.
    if (z && u) {
        std::vector<std::pair<unsigned long, Rat>> values;
        for (unsigned long n = lo; n <= hi; ++n) {
            std::vector<std::pair<std::string, Rat>> per_tag;
            for (const std::string& tag : tags) {
                per_tag.emplace_back(tag, apostol_point_by_tag(tag, n, *z, *u));
            }
            if (const auto bad = first_disagreement(per_tag)) report(n, bad);
            values.emplace_back(n, per_tag.front().second);
        }
        switch (c.format) {
            case Format::plain:
                for (const auto& [n, v] : values) {
                    doc << label(n, u->to_string() + "," + z->to_string())
                        << " = " << v.to_string() << "\n";
                }
                break;
            case Format::csv:
                doc << "n,z,u,value\n";
                for (const auto& [n, v] : values) {
                    doc << n << "," << z->to_string() << "," << u->to_string()
                        << "," << v.to_string() << "\n";
                }
                break;
            case Format::json: {
                json root;
                root["command"] = "apostol";
                root["formula"] = emitted_tag;
                root["z"] = z->to_string();
                root["u"] = u->to_string();
                if (c.n) {
                    root["n"] = *c.n;
                    root["value"] = values.front().second.to_string();
                } else {
                    json results = json::array();
                    for (const auto& [n, v] : values) {
                        json jr;
                        jr["n"] = n;
                        jr["value"] = v.to_string();
                        results.push_back(std::move(jr));
                    }
                    root["results"] = std::move(results);
                }
                doc << root.dump(2) << "\n";
                break;
            }
        }
        return code;
    }

    // Symbolic in z (and possibly u); series table shared across n.
    const std::vector<ABPoly> series_table = apostol_poly_series_table(hi);

    // z fixed, u symbolic: rational-coefficient polynomials in u.
    if (z) {
        std::vector<std::pair<unsigned long, UPolyRat>> values;
        for (unsigned long n = lo; n <= hi; ++n) {
            std::vector<std::pair<std::string, UPolyRat>> per_tag;
            for (const std::string& tag : tags) {
                const ABPoly sym = apostol_symbolic_by_tag(tag, n, series_table);
                per_tag.emplace_back(
                    tag, sym.map([&](const PoleForm& p) { return p.eval(*z); }));
            }
            if (const auto bad = first_disagreement(per_tag)) report(n, bad);
            values.emplace_back(n, per_tag.front().second);
        }
        switch (c.format) {
            case Format::plain:
                for (const auto& [n, p] : values) {
                    doc << label(n, "u," + z->to_string()) << " = "
                        << p.to_string() << "\n";
                }
                break;
            case Format::csv:
                doc << "n,u_power,coefficient\n";
                for (const auto& [n, p] : values) csv_coefficient_rows(doc, n, p);
                break;
            case Format::json: {
                json root;
                root["command"] = "apostol";
                root["formula"] = emitted_tag;
                root["z"] = z->to_string();
                json results = json::array();
                for (const auto& [n, p] : values) {
                    json jr;
                    jr["n"] = n;
                    jr["u_coeffs"] = json::parse(json_of(p));
                    results.push_back(std::move(jr));
                }
                root["results"] = std::move(results);
                doc << root.dump(2) << "\n";
                break;
            }
        }
        return code;
    }

    // Fully symbolic polynomials, optionally specialized at a rational u.
    std::vector<std::pair<unsigned long, ABPoly>> sym_values;
    for (unsigned long n = lo; n <= hi; ++n) {
        std::vector<std::pair<std::string, ABPoly>> per_tag;
        for (const std::string& tag : tags) {
            per_tag.emplace_back(tag,
                                 apostol_symbolic_by_tag(tag, n, series_table));
        }
        if (const auto bad = first_disagreement(per_tag)) report(n, bad);
        sym_values.emplace_back(n, per_tag.front().second);
    }

    if (u) {
        std::vector<std::pair<unsigned long, PoleForm>> values;
        for (const auto& [n, p] : sym_values) {
            values.emplace_back(n, p.eval(PoleForm(*u)));
        }
        switch (c.format) {
            case Format::plain:
                for (const auto& [n, v] : values) {
                    doc << label(n, u->to_string() + ",z") << " = "
                        << v.to_string() << "\n";
                }
                break;
            case Format::csv:
                doc << "n,u,value\n";
                for (const auto& [n, v] : values) {
                    doc << n << "," << u->to_string() << "," << v.to_string()
                        << "\n";
                }
                break;
            case Format::json: {
                json root;
                root["command"] = "apostol";
                root["formula"] = emitted_tag;
                root["u"] = u->to_string();
                json results = json::array();
                for (const auto& [n, v] : values) {
                    json jr;
                    jr["n"] = n;
                    jr["value"] = json::parse(json_of(v));
                    results.push_back(std::move(jr));
                }
                root["results"] = std::move(results);
                doc << root.dump(2) << "\n";
                break;
            }
        }
        return code;
    }

    switch (c.format) {
        case Format::plain:
            for (const auto& [n, p] : sym_values) {
                doc << label(n, "u,z") << " = " << p.to_string() << "\n";
            }
            break;
        case Format::csv:
            doc << "n,u_power,coefficient\n";
            for (const auto& [n, p] : sym_values) csv_coefficient_rows(doc, n, p);
            break;
        case Format::json:
            if (c.n) {
                doc << json::parse(json_of(sym_values.front().second, *c.n,
                                           emitted_tag))
                           .dump(2)
                    << "\n";
            } else {
                json root;
                root["command"] = "apostol";
                json results = json::array();
                for (const auto& [n, p] : sym_values) {
                    results.push_back(json::parse(json_of(p, n, emitted_tag)));
                }
                root["results"] = std::move(results);
                doc << root.dump(2) << "\n";
            }
            break;
    }
    return code;
}

// ------------------------------------------------------------------ verify

int run_verify(const RunConfig& c, std::ostream& doc, std::ostream& err) {
    VerifyOptions opt;
    if (c.n_max) {
        opt.poly_n_max = *c.n_max;
        opt.number_n_max = *c.n_max;
    }
    if (c.poly_n_max) opt.poly_n_max = *c.poly_n_max;
    if (c.number_n_max) opt.number_n_max = *c.number_n_max;
    if (c.random_cases) opt.random_cases = *c.random_cases;

    const std::vector<CheckResult> results = run_verification(opt);
    std::size_t passed = 0;
    for (const CheckResult& r : results) passed += r.passed ? 1 : 0;

    switch (c.format) {
        case Format::plain:
            for (const CheckResult& r : results) {
                doc << (r.passed ? "[ ok ] " : "[FAIL] ") << r.name << " ("
                    << r.cases << " cases)";
                if (!r.detail.empty()) doc << ": " << r.detail;
                doc << "\n";
            }
            doc << "suites passed: " << passed << "/" << results.size() << "\n";
            break;
        case Format::csv:
            doc << "suite,passed,cases,detail\n";
            for (const CheckResult& r : results) {
                doc << r.name << "," << bool_text(r.passed) << "," << r.cases
                    << "," << csv_quote(r.detail) << "\n";
            }
            break;
        case Format::json: {
            json suites = json::array();
            for (const CheckResult& r : results) {
                json jr;
                jr["name"] = r.name;
                jr["passed"] = r.passed;
                jr["cases"] = r.cases;
                jr["detail"] = r.detail;
                suites.push_back(std::move(jr));
            }
            json root;
            root["command"] = "verify";
            root["poly_n_max"] = opt.poly_n_max;
            root["number_n_max"] = opt.number_n_max;
            root["random_cases"] = opt.random_cases;
            root["suites"] = std::move(suites);
            root["passed"] = all_passed(results);
            doc << root.dump(2) << "\n";
            break;
        }
    }
    if (!all_passed(results)) {
        for (const CheckResult& r : results) {
            if (!r.passed) {
                err << "verification failed: " << r.name << ": " << r.detail
                    << "\n";
                break;
            }
        }
        return 1;
    }
    return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ostringstream doc;
    int code = 0;
    try {
        switch (config.command) {
            case Command::stirling:
                code = run_stirling(config, doc, err);
                break;
            case Command::bell:
                code = run_bell(config, doc, err);
                break;
            case Command::bernoulli:
                code = run_bernoulli(config, doc, err);
                break;
            case Command::apostol:
                code = run_apostol(config, doc, err);
                break;
            case Command::verify:
                code = run_verify(config, doc, err);
                break;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }

    if (config.output_path) {
        std::ofstream file(*config.output_path);
        if (!file) {
            err << "error: cannot open output file " << *config.output_path
                << "\n";
            return 2;
        }
        file << doc.str();
    } else {
        out << doc.str();
    }
    return code;
}

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
    RunConfig config;
    std::string format_text = "plain";
    std::string output_path;
    std::string z_text;
    std::string u_text;
    std::string formula_text;
    std::string x_text;

    CLI::App app{"Exact Bernoulli and Apostol-Bernoulli calculator", "abexact"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text,
                        "Output format: plain, json, csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
        sub->add_option("--output", output_path,
                        "Write the document to this file");
    };

    CLI::App* stirling =
        app.add_subcommand("stirling", "Stirling numbers of the second kind");
    stirling->add_option("--n-max", config.n_max, "Largest row")->required();
    add_common(stirling);

    CLI::App* bell = app.add_subcommand(
        "bell", "Partial exponential Bell polynomial at rational arguments");
    bell->add_option("--n", config.n, "Weight")->required();
    bell->add_option("--k", config.k, "Number of parts")->required();
    bell->add_option("--x", x_text,
                     "Comma-separated rational arguments x_1..x_{n-k+1} "
                     "(default: all ones)");
    add_common(bell);

    CLI::App* bernoulli = app.add_subcommand(
        "bernoulli", "Classical Bernoulli numbers and polynomials");
    auto* bn = bernoulli->add_option("--n", config.n, "Single index");
    auto* bnm = bernoulli->add_option("--n-max", config.n_max,
                                      "Table from 0 to this index");
    bn->excludes(bnm);
    bernoulli->add_flag("--poly", config.poly,
                        "Polynomial family instead of numbers");
    bernoulli->add_option("--u", u_text,
                          "Evaluate the polynomials at this rational");
    bernoulli
        ->add_option("--formula", formula_text,
                     "Restrict to one formula: recurrence, composition, "
                     "stirling, determinant, series")
        ->check(CLI::IsMember({"recurrence", "composition", "stirling",
                               "determinant", "series"}));
    add_common(bernoulli);

    CLI::App* apostol = app.add_subcommand(
        "apostol", "Apostol-Bernoulli polynomials, symbolic in z");
    auto* an = apostol->add_option("--n", config.n, "Single index");
    auto* anm =
        apostol->add_option("--n-max", config.n_max, "Table from 0 to this index");
    an->excludes(anm);
    apostol->add_option("--z", z_text, "Evaluate at this rational z (z != 1)");
    apostol->add_option("--u", u_text, "Evaluate at this rational u");
    apostol
        ->add_option("--formula", formula_text,
                     "Restrict to one formula: stirling, monomial, "
                     "determinant, series, bell, quotient")
        ->check(CLI::IsMember({"stirling", "monomial", "determinant", "series",
                               "bell", "quotient"}));
    add_common(apostol);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run every cross-formula and property suite");
    verify->add_option("--n-max", config.n_max,
                       "Cap for both polynomial and number lattices");
    verify->add_option("--poly-n-max", config.poly_n_max,
                       "Cap for polynomial lattices (default 10)");
    verify->add_option("--number-n-max", config.number_n_max,
                       "Cap for number lattices (default 20)");
    verify->add_option("--cases", config.random_cases,
                       "Randomized cases per property suite (default 200)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (app.got_subcommand(stirling)) config.command = Command::stirling;
    if (app.got_subcommand(bell)) config.command = Command::bell;
    if (app.got_subcommand(bernoulli)) config.command = Command::bernoulli;
    if (app.got_subcommand(apostol)) config.command = Command::apostol;
    if (app.got_subcommand(verify)) config.command = Command::verify;

    if (!format_text.empty()) {
        if (format_text == "plain") config.format = Format::plain;
        if (format_text == "json") config.format = Format::json;
        if (format_text == "csv") config.format = Format::csv;
    }
    if (!output_path.empty()) config.output_path = output_path;
    if (!z_text.empty()) config.z = z_text;
    if (!u_text.empty()) config.u = u_text;
    if (!formula_text.empty()) config.formula = formula_text;
    if (!x_text.empty()) config.x = x_text;

    if ((config.command == Command::bernoulli ||
         config.command == Command::apostol) &&
        config.n.has_value() == config.n_max.has_value()) {
        err << "error: provide exactly one of --n and --n-max\n";
        return 2;
    }

    return run(config, out, err);
}

}  // namespace abexact::cli
