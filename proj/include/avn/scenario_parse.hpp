#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avn/hv.hpp"

// Line-oriented scenario file format:
//
//   # comment to end of line
//   observables: X1 Y1 X2 Y2 X3 Y3
//   constraint: product X1 Y2 Y3 = +1
//   constraint: sum ( X1 Y2 Y3 ; Y1 X2 Y3 ; Y1 Y2 X3 ) = 3
//
// Symbol names match [A-Za-z][A-Za-z0-9_]*. Parsing never throws; failures
// come back as line/column diagnostics.

namespace avn {

enum class DiagCode {
    SyntaxError,
    UnknownSymbol,
    MalformedTarget,
    TargetOutOfRange,
    DuplicateSymbol,
    ObservableCapExceeded,
};

inline std::string_view diag_code_name(DiagCode c) {
    switch (c) {
        case DiagCode::SyntaxError: return "syntax-error";
        case DiagCode::UnknownSymbol: return "unknown-symbol";
        case DiagCode::MalformedTarget: return "malformed-target";
        case DiagCode::TargetOutOfRange: return "target-out-of-range";
        case DiagCode::DuplicateSymbol: return "duplicate-symbol";
        case DiagCode::ObservableCapExceeded: return "observable-cap-exceeded";
    }
    return "?";
}

struct Diagnostic {
    int line = 0;    // 1-based
    int column = 0;  // 1-based
    DiagCode code = DiagCode::SyntaxError;
    std::string message;

    std::string str() const {
        return std::to_string(line) + ":" + std::to_string(column) + ": " +
               std::string(diag_code_name(code)) + ": " + message;
    }
};

struct ParseResult {
    std::optional<Scenario> scenario;  // present iff there are no diagnostics
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return scenario.has_value(); }
};

namespace detail {

struct Token {
    std::string text;
    int column;  // 1-based
};

// '(' ')' ';' '=' are single-char tokens; '#' starts a comment; everything
// else splits on whitespace.
inline std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(' || c == ')' || c == ';' || c == '=') {
            out.push_back({std::string(1, c), static_cast<int>(i) + 1});
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size()) {
            const char d = line[i];
            if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' ||
                d == ';' || d == '=' || d == '#')
                break;
            ++i;
        }
        out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return out;
}

inline bool valid_symbol_name(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline std::optional<int> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) return std::nullopt;
    long v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        v = v * 10 + (s[i] - '0');
        if (v > 1000000) return std::nullopt;
    }
    return static_cast<int>(neg ? -v : v);
}

}  // namespace detail

inline ParseResult parse_scenario(std::string_view text) {
    using detail::Token;
    ParseResult result;
    Scenario scenario;
    auto diag = [&](int line, int col, DiagCode code, std::string msg) {
        result.diagnostics.push_back({line, col, code, std::move(msg)});
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;

        std::vector<Token> toks = detail::tokenize_line(line);
        if (!toks.empty()) {
            const Token& head = toks[0];
            if (head.text == "observables:") {
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    const Token& t = toks[i];
                    if (!detail::valid_symbol_name(t.text)) {
                        diag(line_no, t.column, DiagCode::SyntaxError,
                             "invalid symbol name '" + t.text + "'");
                        continue;
                    }
                    if (scenario.index_of(t.text) >= 0) {
                        diag(line_no, t.column, DiagCode::DuplicateSymbol,
                             "observable '" + t.text + "' declared twice");
                        continue;
                    }
                    if (scenario.observables.size() >= kMaxObservables) {
                        diag(line_no, t.column, DiagCode::ObservableCapExceeded,
                             "more than " + std::to_string(kMaxObservables) +
                                 " observables (search is 2^n)");
                        continue;
                    }
                    scenario.observables.push_back(t.text);
                }
            } else if (head.text == "constraint:") {
                if (toks.size() < 2) {
                    diag(line_no, head.column, DiagCode::SyntaxError,
                         "expected 'product' or 'sum' after 'constraint:'");
                } else if (toks[1].text == "product") {
                    // constraint: product <sym>+ = <target>
                    std::vector<int> syms;
                    std::size_t i = 2;
                    bool bad = false;
                    for (; i < toks.size() && toks[i].text != "="; ++i) {
                        const Token& t = toks[i];
                        if (!detail::valid_symbol_name(t.text)) {
                            diag(line_no, t.column, DiagCode::SyntaxError,
                                 "invalid symbol name '" + t.text + "'");
                            bad = true;
                            break;
                        }
                        const int idx = scenario.index_of(t.text);
                        if (idx < 0) {
                            diag(line_no, t.column, DiagCode::UnknownSymbol,
                                 "undeclared observable '" + t.text + "'");
                            bad = true;
                            break;
                        }
                        syms.push_back(idx);
                    }
                    if (!bad) {
                        if (syms.empty()) {
                            diag(line_no, toks[1].column, DiagCode::SyntaxError,
                                 "product constraint needs at least one symbol");
                        } else if (i >= toks.size()) {
                            diag(line_no, static_cast<int>(line.size()) + 1, DiagCode::SyntaxError,
                                 "expected '=' and a target");
                        } else if (i + 1 >= toks.size()) {
                            diag(line_no, toks[i].column, DiagCode::MalformedTarget,
                                 "missing target after '='");
                        } else if (i + 2 < toks.size()) {
                            diag(line_no, toks[i + 2].column, DiagCode::SyntaxError,
                                 "unexpected trailing token '" + toks[i + 2].text + "'");
                        } else {
                            const Token& tt = toks[i + 1];
                            const std::optional<int> target = detail::parse_int(tt.text);
                            if (!target) {
                                diag(line_no, tt.column, DiagCode::MalformedTarget,
                                     "target '" + tt.text + "' is not an integer");
                            } else if (*target != 1 && *target != -1) {
                                diag(line_no, tt.column, DiagCode::TargetOutOfRange,
                                     "product target must be +1 or -1, got " + tt.text);
                            } else {
                                Constraint c;
                                c.kind = Constraint::Kind::ProductEquals;
                                c.terms.push_back(std::move(syms));
                                c.target = *target;
                                scenario.constraints.push_back(std::move(c));
                            }
                        }
                    }
                } else if (toks[1].text == "sum") {
                    // constraint: sum ( <sym>+ ; <sym>+ ; ... ) = <target>
                    std::size_t i = 2;
                    bool bad = false;
                    std::vector<std::vector<int>> term_lists;
                    if (i >= toks.size() || toks[i].text != "(") {
                        diag(line_no, i < toks.size() ? toks[i].column
                                                      : static_cast<int>(line.size()) + 1,
                             DiagCode::SyntaxError, "expected '(' after 'sum'");
                        bad = true;
                    } else {
                        ++i;
                        std::vector<int> current;
                        while (i < toks.size() && toks[i].text != ")") {
                            const Token& t = toks[i];
                            if (t.text == ";") {
                                if (current.empty()) {
                                    diag(line_no, t.column, DiagCode::SyntaxError,
                                         "empty term before ';'");
                                    bad = true;
                                    break;
                                }
                                term_lists.push_back(std::move(current));
                                current.clear();
                                ++i;
                                continue;
                            }
                            if (!detail::valid_symbol_name(t.text)) {
                                diag(line_no, t.column, DiagCode::SyntaxError,
                                     "invalid symbol name '" + t.text + "'");
                                bad = true;
                                break;
                            }
                            const int idx = scenario.index_of(t.text);
                            if (idx < 0) {
                                diag(line_no, t.column, DiagCode::UnknownSymbol,
                                     "undeclared observable '" + t.text + "'");
                                bad = true;
                                break;
                            }
                            current.push_back(idx);
                            ++i;
                        }
                        if (!bad) {
                            if (i >= toks.size()) {
                                diag(line_no, static_cast<int>(line.size()) + 1,
                                     DiagCode::SyntaxError, "missing ')'");
                                bad = true;
                            } else {
                                if (current.empty()) {
                                    diag(line_no, toks[i].column, DiagCode::SyntaxError,
                                         "empty term in sum");
                                    bad = true;
                                } else {
                                    term_lists.push_back(std::move(current));
                                }
                                ++i;  // past ')'
                            }
                        }
                    }
                    if (!bad) {
                        if (i >= toks.size() || toks[i].text != "=") {
                            diag(line_no, i < toks.size() ? toks[i].column
                                                          : static_cast<int>(line.size()) + 1,
                                 DiagCode::SyntaxError, "expected '=' after ')'");
                        } else if (i + 1 >= toks.size()) {
                            diag(line_no, toks[i].column, DiagCode::MalformedTarget,
                                 "missing target after '='");
                        } else if (i + 2 < toks.size()) {
                            diag(line_no, toks[i + 2].column, DiagCode::SyntaxError,
                                 "unexpected trailing token '" + toks[i + 2].text + "'");
                        } else {
                            const Token& tt = toks[i + 1];
                            const std::optional<int> target = detail::parse_int(tt.text);
                            const int k = static_cast<int>(term_lists.size());
                            if (!target) {
                                diag(line_no, tt.column, DiagCode::MalformedTarget,
                                     "target '" + tt.text + "' is not an integer");
                            } else if (*target < -k || *target > k ||
                                       ((k - *target) % 2) != 0) {
                                diag(line_no, tt.column, DiagCode::TargetOutOfRange,
                                     "sum of " + std::to_string(k) +
                                         " products cannot equal " + tt.text);
                            } else {
                                Constraint c;
                                c.kind = Constraint::Kind::SumOfProductsEquals;
                                c.terms = std::move(term_lists);
                                c.target = *target;
                                scenario.constraints.push_back(std::move(c));
                            }
                        }
                    }
                } else {
                    diag(line_no, toks[1].column, DiagCode::SyntaxError,
                         "unknown constraint kind '" + toks[1].text + "'");
                }
            } else {
                diag(line_no, head.column, DiagCode::SyntaxError,
                     "expected 'observables:' or 'constraint:', got '" + head.text + "'");
            }
        }

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }

    if (result.diagnostics.empty()) result.scenario = std::move(scenario);
    return result;
}

}  // namespace avn
