// Copyright 2026 The HyPAQ Authors
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

#include "hypaq/circuit_text.hpp"

#include <cctype>
#include <charconv>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include "detail.hpp"
#include "hypaq/error.hpp"

namespace hypaq {

namespace {

using detail::Overloaded;

enum class Tok { Ident, Integer, Real, String, Symbol, EqEq, Arrow, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space_and_comments();
            Token t;
            t.line = line_;
            t.column = col_;
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            char ch = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                t.kind = Tok::Ident;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    t.text += advance();
            } else if (std::isdigit(static_cast<unsigned char>(ch)) || (ch == '.' && digit_at(pos_ + 1))) {
                lex_number(t);
            } else if (ch == '"') {
                t.kind = Tok::String;
                advance();
                while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') t.text += advance();
                if (pos_ >= src_.size() || src_[pos_] != '"')
                    throw ParseError(ErrorCode::Syntax, t.line, t.column, "unterminated string literal");
                advance();
            } else if (ch == '=' && peek(1) == '=') {
                t.kind = Tok::EqEq;
                t.text = "==";
                advance();
                advance();
            } else if (ch == '-' && peek(1) == '>') {
                t.kind = Tok::Arrow;
                t.text = "->";
                advance();
                advance();
            } else if (std::string_view(";,[](){}=-!*/+&|:<>").find(ch) != std::string_view::npos) {
                t.kind = Tok::Symbol;
                t.text = std::string(1, advance());
            } else {
                throw ParseError(ErrorCode::Syntax, t.line, t.column, std::string("unexpected character '") + ch + "'");
            }
            out.push_back(std::move(t));
        }
    }

   private:
    char peek(std::size_t ahead) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }
    bool digit_at(std::size_t i) const { return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i])); }

    char advance() {
        char ch = src_[pos_++];
        if (ch == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return ch;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char ch = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else if (ch == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                return;
            }
        }
    }

    void lex_number(Token &t) {
        t.kind = Tok::Integer;
        while (digit_at(pos_)) t.text += advance();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            t.kind = Tok::Real;
            t.text += advance();
            while (digit_at(pos_)) t.text += advance();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t save = pos_;
            char sign = peek(1);
            bool has_sign = sign == '+' || sign == '-';
            if (digit_at(pos_ + (has_sign ? 2 : 1))) {
                t.kind = Tok::Real;
                t.text += advance();
                if (has_sign) t.text += advance();
                while (digit_at(pos_)) t.text += advance();
            } else {
                pos_ = save;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

const std::set<std::string, std::less<>> kUnsupportedKeywords = {
    "gate",   "def",   "defcal", "cal",    "let",   "barrier", "delay",   "input", "output", "const",
    "int",    "uint",  "float",  "angle",  "bool",  "duration", "stretch", "box",   "switch", "break",
    "continue", "return", "extern", "opaque", "qreg", "creg",  "ctrl",    "inv",   "pow",    "gphase",
    "array",  "complex",
};

class Parser {
   public:
    Parser(std::vector<Token> tokens, const ParseOptions &options) : toks_(std::move(tokens)), options_(options) {}

    ParseResult run() {
        while (!at_end()) top_level();
        if (!qubits_declared_)
            throw ParseError(ErrorCode::Syntax, cur().line, cur().column, "missing qubit register declaration");
        ParseResult result;
        result.warnings = find_unwritten_condition_reads(c_);
        if (options_.strict_conditions && !result.warnings.empty()) {
            const auto &w = result.warnings.front();
            throw ParseError(ErrorCode::InvalidCircuit, w.line, 1, w.message);
        }
        validate(c_);
        result.circuit = std::move(c_);
        return result;
    }

   private:
    const Token &cur() const { return toks_[pos_]; }
    bool at_end() const { return cur().kind == Tok::End; }

    bool is_symbol(std::string_view s) const { return cur().kind == Tok::Symbol && cur().text == s; }
    bool is_keyword(std::string_view s) const { return cur().kind == Tok::Ident && cur().text == s; }

    [[noreturn]] void fail(ErrorCode code, const Token &at, const std::string &msg) const {
        throw ParseError(code, at.line, at.column, msg);
    }

    std::string describe(const Token &t) const {
        switch (t.kind) {
            case Tok::End: return "end of input";
            case Tok::String: return "string \"" + t.text + "\"";
            default: return "'" + t.text + "'";
        }
    }

    const Token &take() { return toks_[pos_++]; }

    void expect_symbol(std::string_view s) {
        if (!is_symbol(s)) fail(ErrorCode::Syntax, cur(), "expected '" + std::string(s) + "', found " + describe(cur()));
        ++pos_;
    }

    void expect_keyword(std::string_view s) {
        if (!is_keyword(s)) fail(ErrorCode::Syntax, cur(), "expected '" + std::string(s) + "', found " + describe(cur()));
        ++pos_;
    }

    std::string expect_ident(std::string_view what) {
        if (cur().kind != Tok::Ident) fail(ErrorCode::Syntax, cur(), "expected " + std::string(what) + ", found " + describe(cur()));
        return take().text;
    }

    std::uint64_t expect_integer(std::string_view what) {
        if (cur().kind != Tok::Integer) fail(ErrorCode::Syntax, cur(), "expected " + std::string(what) + ", found " + describe(cur()));
        const Token &t = take();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v > 0xffffffffULL)
            fail(ErrorCode::Syntax, t, "integer literal '" + t.text + "' is too large");
        return v;
    }

    void reject_unsupported() {
        if (cur().kind == Tok::Ident && kUnsupportedKeywords.contains(cur().text))
            fail(ErrorCode::UnsupportedConstruct, cur(), "unsupported construct '" + cur().text + "'");
    }

    void top_level() {
        const Token &t = cur();
        if (is_keyword("circuit")) {
            if (seen_statement_ || header_seen_) fail(ErrorCode::Syntax, t, "'circuit' header must come first and only once");
            ++pos_;
            c_.name = expect_ident("circuit name");
            expect_symbol(";");
            header_seen_ = true;
            return;
        }
        if (is_keyword("OPENQASM")) {
            ++pos_;
            if (cur().kind != Tok::Integer && cur().kind != Tok::Real) fail(ErrorCode::Syntax, cur(), "expected version number");
            ++pos_;
            expect_symbol(";");
            return;
        }
        if (is_keyword("include")) {
            ++pos_;
            if (cur().kind != Tok::String) fail(ErrorCode::Syntax, cur(), "expected include path string");
            ++pos_;
            expect_symbol(";");
            return;
        }
        if (is_keyword("qubit")) {
            declare_qubits();
            return;
        }
        if (is_keyword("bit")) {
            declare_bits();
            return;
        }
        seen_statement_ = true;
        c_.body.items.push_back(statement());
    }

    void declare_qubits() {
        const Token &t = take();
        if (qubits_declared_) fail(ErrorCode::UnsupportedConstruct, t, "unsupported construct 'multiple qubit registers'");
        if (!is_symbol("[")) fail(ErrorCode::UnsupportedConstruct, cur(), "unsupported construct 'single qubit declaration' (use qubit[n])");
        expect_symbol("[");
        auto n = expect_integer("register size");
        expect_symbol("]");
        const Token &name_tok = cur();
        auto name = expect_ident("register name");
        expect_symbol(";");
        if (n == 0) fail(ErrorCode::Syntax, name_tok, "qubit register '" + name + "' must have at least one qubit");
        if (name_in_use(name)) fail(ErrorCode::Syntax, name_tok, "register '" + name + "' already declared");
        c_.qubit_register = name;
        c_.num_qubits = static_cast<std::uint32_t>(n);
        qubits_declared_ = true;
    }

    void declare_bits() {
        take();
        if (!is_symbol("[")) fail(ErrorCode::UnsupportedConstruct, cur(), "unsupported construct 'single bit declaration' (use bit[n])");
        expect_symbol("[");
        auto n = expect_integer("register size");
        expect_symbol("]");
        const Token &name_tok = cur();
        auto name = expect_ident("register name");
        expect_symbol(";");
        if (n == 0) fail(ErrorCode::Syntax, name_tok, "bit register '" + name + "' must have at least one bit");
        if (name_in_use(name)) fail(ErrorCode::Syntax, name_tok, "register '" + name + "' already declared");
        c_.clbit_registers.push_back({name, static_cast<std::uint32_t>(n)});
    }

    bool name_in_use(const std::string &name) const {
        if (qubits_declared_ && c_.qubit_register == name) return true;
        for (const auto &r : c_.clbit_registers)
            if (r.name == name) return true;
        return false;
    }

    std::optional<std::size_t> bit_register(const std::string &name) const {
        for (std::size_t i = 0; i < c_.clbit_registers.size(); ++i)
            if (c_.clbit_registers[i].name == name) return i;
        return std::nullopt;
    }

    QubitRef qubit_operand() {
        const Token &t = cur();
        auto name = expect_ident("qubit operand");
        if (!qubits_declared_ || name != c_.qubit_register) {
            if (bit_register(name)) fail(ErrorCode::Syntax, t, "'" + name + "' is a bit register, expected a qubit");
            fail(ErrorCode::UndeclaredRegister, t, "undeclared qubit register '" + name + "'");
        }
        if (!is_symbol("[")) fail(ErrorCode::UnsupportedConstruct, cur(), "unsupported construct 'register broadcast'");
        expect_symbol("[");
        const Token &it = cur();
        auto i = expect_integer("qubit index");
        expect_symbol("]");
        if (i >= c_.num_qubits)
            fail(ErrorCode::IndexOutOfRange, it,
                 name + "[" + std::to_string(i) + "] out of range (size " + std::to_string(c_.num_qubits) + ")");
        return QubitRef{static_cast<std::uint32_t>(i)};
    }

    ClbitRef bit_operand() {
        const Token &t = cur();
        auto name = expect_ident("bit register");
        auto reg = bit_register(name);
        if (!reg) fail(ErrorCode::UndeclaredRegister, t, "undeclared bit register '" + name + "'");
        expect_symbol("[");
        const Token &it = cur();
        auto i = expect_integer("bit index");
        expect_symbol("]");
        if (i >= c_.clbit_registers[*reg].size)
            fail(ErrorCode::IndexOutOfRange, it,
                 name + "[" + std::to_string(i) + "] out of range (size " +
                     std::to_string(c_.clbit_registers[*reg].size) + ")");
        return ClbitRef{c_.register_offset(*reg) + static_cast<std::uint32_t>(i)};
    }

    Sequence braced_body() {
        expect_symbol("{");
        Sequence s;
        while (!is_symbol("}")) {
            if (at_end()) fail(ErrorCode::Syntax, cur(), "missing '}'");
            if (is_keyword("qubit") || is_keyword("bit") || is_keyword("circuit"))
                fail(ErrorCode::UnsupportedConstruct, cur(), "unsupported construct 'declaration inside a block'");
            s.items.push_back(statement());
        }
        expect_symbol("}");
        return s;
    }

    Statement statement() {
        reject_unsupported();
        const Token &t = cur();
        Statement st;
        st.line = t.line;
        if (!qubits_declared_ && t.kind != Tok::End)
            fail(ErrorCode::Syntax, t, "statement before the qubit register declaration");
        if (t.kind != Tok::Ident) fail(ErrorCode::Syntax, t, "expected a statement, found " + describe(t));

        if (t.text == "if") {
            ++pos_;
            IfBlock b;
            b.cond = paren_condition();
            b.then_body = braced_body();
            if (is_keyword("else")) {
                ++pos_;
                if (is_keyword("if")) fail(ErrorCode::UnsupportedConstruct, cur(), "unsupported construct 'else if' (nest the if in braces)");
                b.else_body = braced_body();
            }
            st.node = std::move(b);
        } else if (t.text == "else") {
            fail(ErrorCode::Syntax, t, "'else' without a preceding if block");
        } else if (t.text == "while") {
            ++pos_;
            WhileBlock b;
            b.cond = paren_condition();
            b.body = braced_body();
            st.node = std::move(b);
        } else if (t.text == "for") {
            ++pos_;
            if (cur().kind == Tok::Ident) fail(ErrorCode::UnsupportedConstruct, cur(), "unsupported construct 'for-in loop' (use for <count>)");
            const Token &ct = cur();
            auto count = expect_integer("loop count");
            if (count == 0) fail(ErrorCode::Syntax, ct, "for loop count must be at least 1");
            ForBlock b;
            b.count = static_cast<std::uint32_t>(count);
            b.body = braced_body();
            st.node = std::move(b);
        } else if (t.text == "reset") {
            ++pos_;
            st.node = ResetOp{qubit_operand()};
            expect_symbol(";");
        } else if (t.text == "measure") {
            ++pos_;
            MeasureOp m;
            m.qubit = qubit_operand();
            if (cur().kind != Tok::Arrow) fail(ErrorCode::Syntax, cur(), "expected '->' after measured qubit");
            ++pos_;
            m.clbit = bit_operand();
            expect_symbol(";");
            st.node = m;
        } else if (toks_[pos_ + 1].kind == Tok::Symbol && toks_[pos_ + 1].text == "[") {
            MeasureOp m;
            m.clbit = bit_operand();
            expect_symbol("=");
            expect_keyword("measure");
            m.qubit = qubit_operand();
            expect_symbol(";");
            st.node = m;
        } else {
            st.node = gate_call();
        }
        return st;
    }

    GateOp gate_call() {
        GateOp g;
        g.name = take().text;
        if (is_symbol("(")) {
            ++pos_;
            if (!is_symbol(")")) {
                g.params.push_back(real());
                while (is_symbol(",")) {
                    ++pos_;
                    g.params.push_back(real());
                }
            }
            expect_symbol(")");
        }
        const Token &first = cur();
        g.qubits.push_back(qubit_operand());
        while (is_symbol(",")) {
            ++pos_;
            g.qubits.push_back(qubit_operand());
        }
        expect_symbol(";");
        std::set<std::uint32_t> seen;
        for (auto q : g.qubits)
            if (!seen.insert(q.index).second)
                fail(ErrorCode::Syntax, first, "gate '" + g.name + "' uses q[" + std::to_string(q.index) + "] twice");
        return g;
    }

    double real() {
        bool negative = false;
        if (is_symbol("-")) {
            negative = true;
            ++pos_;
        }
        const Token &t = cur();
        double v = 0.0;
        if (t.kind == Tok::Ident && (t.text == "pi" || t.text == "PI")) {
            v = std::numbers::pi;
        } else if (t.kind == Tok::Integer || t.kind == Tok::Real) {
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc() || ptr != t.text.data() + t.text.size())
                fail(ErrorCode::Syntax, t, "invalid real literal '" + t.text + "'");
        } else if (t.kind == Tok::Ident) {
            fail(ErrorCode::UnsupportedConstruct, t, "unsupported construct 'symbolic parameter " + t.text + "'");
        } else {
            fail(ErrorCode::Syntax, t, "expected a real parameter, found " + describe(t));
        }
        ++pos_;
        if (cur().kind == Tok::Ident ||
            (cur().kind == Tok::Symbol && std::string_view("-+*/").find(cur().text) != std::string_view::npos))
            fail(ErrorCode::UnsupportedConstruct, cur(), "unsupported construct 'parameter expression'");
        return negative ? -v : v;
    }

    Condition paren_condition() {
        expect_symbol("(");
        if (is_symbol("!") || is_symbol("-"))
            fail(ErrorCode::UnsupportedConstruct, cur(), "unsupported construct 'condition expression'");
        const Token &t = cur();
        auto name = expect_ident("condition register");
        auto reg = bit_register(name);
        if (!reg) fail(ErrorCode::UndeclaredRegister, t, "undeclared bit register '" + name + "'");
        Condition cond;
        if (is_symbol("[")) {
            --pos_;
            ClbitRef bit = bit_operand();
            bool value = true;
            if (cur().kind == Tok::EqEq) {
                ++pos_;
                const Token &vt = cur();
                auto v = expect_integer("0 or 1");
                if (v > 1) fail(ErrorCode::Syntax, vt, "bit comparison must be against 0 or 1");
                value = v == 1;
            }
            cond = Condition::bit_equals(bit, value);
        } else {
            if (cur().kind != Tok::EqEq) fail(ErrorCode::Syntax, cur(), "expected '==' after register '" + name + "'");
            ++pos_;
            const Token &lit = cur();
            if (lit.kind == Tok::Integer) fail(ErrorCode::UnsupportedConstruct, lit, "unsupported construct 'integer register comparison' (use a bitstring)");
            if (lit.kind != Tok::String) fail(ErrorCode::Syntax, lit, "expected a bitstring literal");
            const auto &r = c_.clbit_registers[*reg];
            if (lit.text.size() != r.size)
                fail(ErrorCode::Syntax, lit,
                     "bitstring \"" + lit.text + "\" has " + std::to_string(lit.text.size()) + " bits, register '" + name +
                         "' has " + std::to_string(r.size));
            for (char ch : lit.text)
                if (ch != '0' && ch != '1') fail(ErrorCode::Syntax, lit, "bitstring must contain only 0 and 1");
            ++pos_;
            std::vector<ClbitRef> bits;
            auto base = c_.register_offset(*reg);
            for (std::uint32_t i = 0; i < r.size; ++i) bits.push_back(ClbitRef{base + i});
            // Literal is written most-significant (highest index) first.
            cond = Condition::register_equals(std::move(bits), std::string(lit.text.rbegin(), lit.text.rend()));
        }
        if (cur().kind == Tok::Ident || (cur().kind == Tok::Symbol && cur().text != ")"))
            fail(ErrorCode::UnsupportedConstruct, cur(), "unsupported construct 'compound condition'");
        expect_symbol(")");
        return cond;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const ParseOptions &options_;
    Circuit c_;
    bool qubits_declared_ = false;
    bool header_seen_ = false;
    bool seen_statement_ = false;
};

class Writer {
   public:
    explicit Writer(const Circuit &c) : c_(c) {}

    std::string run() {
        out_ << "circuit " << c_.name << ";\n";
        out_ << "qubit[" << c_.num_qubits << "] " << c_.qubit_register << ";\n";
        for (const auto &r : c_.clbit_registers) out_ << "bit[" << r.size << "] " << r.name << ";\n";
        seq(c_.body, 0);
        return out_.str();
    }

   private:
    void indent(int depth) {
        for (int i = 0; i < depth; ++i) out_ << "  ";
    }

    std::string qubit(QubitRef q) const { return c_.qubit_register + "[" + std::to_string(q.index) + "]"; }

    std::string cond(const Condition &cond) const {
        if (cond.kind == ConditionKind::BitEquals && cond.expected == "1") return c_.clbit_label(cond.bits.front());
        return condition_text(cond, c_);
    }

    void seq(const Sequence &s, int depth) {
        for (const auto &st : s.items) stmt(st, depth);
    }

    void stmt(const Statement &st, int depth) {
        indent(depth);
        std::visit(Overloaded{
                       [&](const GateOp &g) {
                           out_ << g.name;
                           if (!g.params.empty()) {
                               out_ << "(";
                               for (std::size_t i = 0; i < g.params.size(); ++i)
                                   out_ << (i ? ", " : "") << detail::format_real(g.params[i]);
                               out_ << ")";
                           }
                           for (std::size_t i = 0; i < g.qubits.size(); ++i) out_ << (i ? ", " : " ") << qubit(g.qubits[i]);
                           out_ << ";\n";
                       },
                       [&](const MeasureOp &m) {
                           out_ << c_.clbit_label(m.clbit) << " = measure " << qubit(m.qubit) << ";\n";
                       },
                       [&](const ResetOp &r) { out_ << "reset " << qubit(r.qubit) << ";\n"; },
                       [&](const IfBlock &b) {
                           out_ << "if (" << cond(b.cond) << ") {\n";
                           seq(b.then_body, depth + 1);
                           indent(depth);
                           if (b.else_body.empty()) {
                               out_ << "}\n";
                           } else {
                               out_ << "} else {\n";
                               seq(b.else_body, depth + 1);
                               indent(depth);
                               out_ << "}\n";
                           }
                       },
                       [&](const WhileBlock &b) {
                           out_ << "while (" << cond(b.cond) << ") {\n";
                           seq(b.body, depth + 1);
                           indent(depth);
                           out_ << "}\n";
                       },
                       [&](const ForBlock &b) {
                           out_ << "for " << b.count << " {\n";
                           seq(b.body, depth + 1);
                           indent(depth);
                           out_ << "}\n";
                       },
                   },
                   st.node);
    }

    const Circuit &c_;
    std::ostringstream out_;
};

}  // namespace

ParseResult parse_circuit_checked(std::string_view text, const ParseOptions &options) {
    Parser parser(Lexer(text).run(), options);
    return parser.run();
}

std::string serialize_circuit(const Circuit &c) { return Writer(c).run(); }

}  // namespace hypaq
