#include "kothe/quiver.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "kothe/lexer.hpp"

namespace kothe::qv {

// ---------------------------------------------------------------------------
// lexer

Lexer::Lexer(const std::string& src) {
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Token::Kind k, std::string text, int l, int c, std::size_t off) {
        toks_.push_back({k, std::move(text), l, c});
        offsets_.push_back(off);
    };
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        int tl = line, tc = col;
        std::size_t off = i;
        if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            push(Token::Kind::arrow, "->", tl, tc, off);
            i += 2;
            col += 2;
            continue;
        }
        if (ch == '-' || (ch >= '0' && ch <= '9')) {
            std::size_t j = i + (ch == '-' ? 1 : 0);
            std::size_t digits = 0;
            while (j < src.size() && src[j] >= '0' && src[j] <= '9') {
                ++j;
                ++digits;
            }
            if (digits > 0) {
                // trailing letters make it a word (vertex names may be alphanumeric)
                bool word = false;
                std::size_t k = j;
                while (k < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_')) {
                    ++k;
                    word = true;
                }
                if (word && ch == '-') throw ParseError("malformed number", tl, tc);
                std::string text = src.substr(i, (word ? k : j) - i);
                push(word ? Token::Kind::word : Token::Kind::number, text, tl, tc, off);
                col += static_cast<int>((word ? k : j) - i);
                i = (word ? k : j);
                continue;
            }
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            push(Token::Kind::word, src.substr(i, j - i), tl, tc, off);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::string("{}:;,[]/").find(ch) != std::string::npos) {
            push(Token::Kind::punct, std::string(1, ch), tl, tc, off);
            ++i;
            ++col;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    push(Token::Kind::eof, "", line, col, src.size());
}

std::size_t Lexer::byte_offset() const { return offsets_[pos_]; }

Token Lexer::expect_word(const std::string& what) {
    if (peek().kind != Token::Kind::word && peek().kind != Token::Kind::number)
        fail("expected " + what);
    return next();
}

Token Lexer::expect_punct(char c) {
    if (peek().kind != Token::Kind::punct || peek().text[0] != c)
        fail(std::string("expected '") + c + "'");
    return next();
}

Token Lexer::expect_keyword(const std::string& kw) {
    if (peek().kind != Token::Kind::word || peek().text != kw) fail("expected '" + kw + "'");
    return next();
}

bool Lexer::try_punct(char c) {
    if (peek().kind == Token::Kind::punct && peek().text[0] == c) {
        next();
        return true;
    }
    return false;
}

void Lexer::fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.kind == Token::Kind::eof ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", got " + got, t.line, t.col);
}

// ---------------------------------------------------------------------------
// quiver

Quiver Quiver::make(std::string name, std::vector<std::string> vertices,
                    std::vector<std::array<std::string, 3>> arrows) {
    Quiver q;
    q.name_ = std::move(name);
    std::set<std::string> seen;
    for (auto& v : vertices) {
        KOTHE_CHECK(seen.insert(v).second, "duplicate vertex label: " + v);
        q.vertices_.push_back(v);
    }
    std::set<std::string> aseen;
    for (auto& [label, s, t] : arrows) {
        KOTHE_CHECK(aseen.insert(label).second, "duplicate arrow label: " + label);
        q.arrows_.push_back({label, q.vertex_index(s), q.vertex_index(t)});
    }
    return q;
}

std::size_t Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == name) return i;
    throw Error("unknown vertex: " + name);
}

std::size_t Quiver::arrow_index(const std::string& label) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].label == label) return i;
    throw Error("unknown arrow: " + label);
}

bool Quiver::has_loop() const {
    return std::any_of(arrows_.begin(), arrows_.end(),
                       [](const Arrow& a) { return a.src == a.dst; });
}

bool Quiver::has_multi_edge() const {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const Arrow& a : arrows_) {
        auto key = std::minmax(a.src, a.dst);
        if (!seen.insert({key.first, key.second}).second) return true;
    }
    return false;
}

bool Quiver::has_oriented_cycle() const {
    enum { white, grey, black };
    std::vector<int> color(vertices_.size(), white);
    std::vector<std::vector<std::size_t>> out(vertices_.size());
    for (const Arrow& a : arrows_) out[a.src].push_back(a.dst);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t s = 0; s < vertices_.size(); ++s) {
        if (color[s] != white) continue;
        stack.push_back({s, 0});
        color[s] = grey;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < out[v].size()) {
                std::size_t w = out[v][idx++];
                if (color[w] == grey) return true;
                if (color[w] == white) {
                    color[w] = grey;
                    stack.push_back({w, 0});
                }
            } else {
                color[v] = black;
                stack.pop_back();
            }
        }
    }
    return false;
}

bool Quiver::is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const Arrow& a : arrows_) {
            std::size_t w;
            if (a.src == v)
                w = a.dst;
            else if (a.dst == v)
                w = a.src;
            else
                continue;
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == vertices_.size();
}

bool Quiver::is_sink(std::size_t v) const {
    return std::none_of(arrows_.begin(), arrows_.end(),
                        [v](const Arrow& a) { return a.src == v; });
}

bool Quiver::is_source(std::size_t v) const {
    return std::none_of(arrows_.begin(), arrows_.end(),
                        [v](const Arrow& a) { return a.dst == v; });
}

Quiver Quiver::reversed() const {
    Quiver q = *this;
    for (Arrow& a : q.arrows_) std::swap(a.src, a.dst);
    return q;
}

Quiver Quiver::reflected_at(std::size_t v) const {
    Quiver q = *this;
    for (Arrow& a : q.arrows_)
        if (a.src == v || a.dst == v) std::swap(a.src, a.dst);
    return q;
}

std::string Quiver::print() const {
    std::ostringstream os;
    os << "quiver " << name_ << " {\n  vertices:";
    for (const auto& v : vertices_) os << " " << v;
    os << ";\n  arrows:";
    for (const Arrow& a : arrows_)
        os << " " << a.label << ": " << vertices_[a.src] << " -> " << vertices_[a.dst] << ";";
    os << "\n}\n";
    return os.str();
}

bool Quiver::operator==(const Quiver& o) const {
    if (name_ != o.name_ || vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size())
        return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].label != o.arrows_[i].label || arrows_[i].src != o.arrows_[i].src ||
            arrows_[i].dst != o.arrows_[i].dst)
            return false;
    return true;
}

Quiver parse_quiver(const std::string& text, std::string* trailing_out) {
    Lexer lex(text);
    lex.expect_keyword("quiver");
    Token name = lex.expect_word("quiver name");
    lex.expect_punct('{');
    lex.expect_keyword("vertices");
    lex.expect_punct(':');
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> vpos;
    while (lex.peek().kind == Token::Kind::word || lex.peek().kind == Token::Kind::number) {
        vpos.push_back({lex.peek().line, lex.peek().col});
        vertices.push_back(lex.next().text);
    }
    if (vertices.empty()) lex.fail("expected at least one vertex label");
    lex.expect_punct(';');
    lex.expect_keyword("arrows");
    lex.expect_punct(':');
    struct RawArrow {
        std::string label, src, dst;
        int line, col;
    };
    std::vector<RawArrow> raw;
    while (!lex.try_punct('}')) {
        Token label = lex.expect_word("arrow label");
        lex.expect_punct(':');
        Token src = lex.expect_word("source vertex");
        if (lex.peek().kind != Token::Kind::arrow) lex.fail("expected '->'");
        lex.next();
        Token dst = lex.expect_word("target vertex");
        lex.expect_punct(';');
        raw.push_back({label.text, src.text, dst.text, label.line, label.col});
    }

    std::set<std::string> vset;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!vset.insert(vertices[i]).second)
            throw ParseError("duplicate vertex label: " + vertices[i], vpos[i].first,
                             vpos[i].second);
    std::set<std::string> aset;
    std::vector<std::array<std::string, 3>> arrows;
    for (auto& a : raw) {
        if (!aset.insert(a.label).second)
            throw ParseError("duplicate arrow label: " + a.label, a.line, a.col);
        if (!vset.count(a.src))
            throw ParseError("arrow references undeclared vertex: " + a.src, a.line, a.col);
        if (!vset.count(a.dst))
            throw ParseError("arrow references undeclared vertex: " + a.dst, a.line, a.col);
        arrows.push_back({a.label, a.src, a.dst});
    }
    Quiver q = Quiver::make(name.text, std::move(vertices), std::move(arrows));
    if (trailing_out) {
        *trailing_out = text.substr(lex.byte_offset());
    } else if (!lex.at_eof()) {
        lex.fail("unexpected trailing input after quiver block");
    }
    return q;
}

// ---------------------------------------------------------------------------
// Dynkin classification

std::string DynkinClass::str() const {
    switch (type) {
        case Type::A: return "A" + std::to_string(n);
        case Type::D: return "D" + std::to_string(n);
        case Type::E: return "E" + std::to_string(n);
        default: return "NotDynkin";
    }
}

namespace {

std::vector<std::vector<std::size_t>> undirected_adj(const Quiver& q) {
    std::vector<std::vector<std::size_t>> adj(q.num_vertices());
    for (const Arrow& a : q.arrows()) {
        adj[a.src].push_back(a.dst);
        adj[a.dst].push_back(a.src);
    }
    return adj;
}

// walk a degree-<=2 path starting at `start`, never stepping back to the
// vertex we came from
std::vector<std::size_t> walk_path(const std::vector<std::vector<std::size_t>>& adj,
                                   std::size_t start, std::size_t forbidden) {
    std::vector<std::size_t> path{start};
    std::size_t prev = forbidden, cur = start;
    for (;;) {
        bool found = false;
        std::size_t nxt = cur;
        for (std::size_t w : adj[cur])
            if (w != prev) {
                nxt = w;
                found = true;
                break;
            }
        if (!found) break;
        prev = cur;
        cur = nxt;
        path.push_back(cur);
    }
    return path;
}

bool verify_relabel(const Quiver& q, const DynkinClass& dc) {
    std::set<std::pair<std::size_t, std::size_t>> expect;
    auto e = [&](std::size_t a, std::size_t b) {
        expect.insert({std::min(a, b), std::max(a, b)});
    };
    std::size_t n = static_cast<std::size_t>(dc.n);
    if (dc.type == DynkinClass::Type::A) {
        for (std::size_t i = 1; i < n; ++i) e(i, i + 1);
    } else if (dc.type == DynkinClass::Type::D) {
        for (std::size_t i = 1; i + 1 <= n - 2; ++i) e(i, i + 1);
        e(n - 2, n - 1);
        e(n - 2, n);
    } else {
        e(1, 3);
        e(2, 4);
        for (std::size_t i = 3; i < n; ++i) e(i, i + 1);
    }
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (const Arrow& a : q.arrows()) {
        std::size_t x = dc.node_of_vertex[a.src], y = dc.node_of_vertex[a.dst];
        got.insert({std::min(x, y), std::max(x, y)});
    }
    return got == expect;
}

}  // namespace

DynkinClass classify_dynkin(const Quiver& q) {
    DynkinClass none;
    std::size_t n = q.num_vertices();
    if (n == 0) return none;
    if (q.has_loop() || q.has_multi_edge()) return none;
    if (!q.is_connected()) return none;
    if (q.num_arrows() != n - 1) return none;  // connected with n-1 edges = tree

    auto adj = undirected_adj(q);
    std::vector<std::size_t> deg(n);
    std::size_t branch = n, nbranch = 0;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = adj[v].size();
        if (deg[v] >= 4) return none;
        if (deg[v] == 3) {
            branch = v;
            ++nbranch;
        }
    }
    if (nbranch > 1) return none;

    DynkinClass dc;
    dc.node_of_vertex.assign(n, 0);
    if (nbranch == 0) {
        dc.type = DynkinClass::Type::A;
        dc.n = static_cast<int>(n);
        if (n == 1) {
            dc.node_of_vertex[0] = 1;
        } else {
            std::size_t leaf = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (deg[v] == 1) {
                    leaf = v;
                    break;
                }
            auto path = walk_path(adj, leaf, n);
            if (path.size() != n) return none;
            for (std::size_t i = 0; i < n; ++i) dc.node_of_vertex[path[i]] = i + 1;
        }
    } else {
        std::vector<std::vector<std::size_t>> arms;
        for (std::size_t w : adj[branch]) arms.push_back(walk_path(adj, w, branch));
        std::size_t total = 1;
        for (auto& a : arms) total += a.size();
        if (arms.size() != 3 || total != n) return none;
        std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.front() < b.front();
        });
        std::size_t l1 = arms[0].size(), l2 = arms[1].size(), l3 = arms[2].size();
        if (l1 == 1 && l2 == 1) {
            dc.type = DynkinClass::Type::D;
            dc.n = static_cast<int>(n);
            dc.node_of_vertex[branch] = n - 2;
            dc.node_of_vertex[arms[0][0]] = n - 1;
            dc.node_of_vertex[arms[1][0]] = n;
            for (std::size_t i = 0; i < arms[2].size(); ++i)
                dc.node_of_vertex[arms[2][i]] = n - 3 - i;
        } else if (l1 == 1 && l2 == 2 && l3 >= 2 && l3 <= 4) {
            dc.type = DynkinClass::Type::E;
            dc.n = static_cast<int>(n);
            dc.node_of_vertex[branch] = 4;
            dc.node_of_vertex[arms[0][0]] = 2;
            dc.node_of_vertex[arms[1][0]] = 3;
            dc.node_of_vertex[arms[1][1]] = 1;
            for (std::size_t i = 0; i < arms[2].size(); ++i)
                dc.node_of_vertex[arms[2][i]] = 5 + i;
        } else {
            return none;
        }
    }
    KOTHE_CHECK(verify_relabel(q, dc), "internal: Dynkin relabel verification failed");
    return dc;
}

long tits_form(const Quiver& q, const DimVector& d) {
    KOTHE_CHECK(d.size() == q.num_vertices(), "dimension vector length mismatch");
    long s = 0;
    for (long x : d) s += x * x;
    for (const Arrow& a : q.arrows()) s -= d[a.src] * d[a.dst];
    return s;
}

DimVector simple_reflection(const Quiver& q, std::size_t v, const DimVector& d) {
    DimVector r = d;
    long acc = -d[v];
    for (const Arrow& a : q.arrows()) {
        if (a.src == v && a.dst != v) acc += d[a.dst];
        if (a.dst == v && a.src != v) acc += d[a.src];
    }
    r[v] = acc;
    return r;
}

std::vector<DimVector> positive_roots(const Quiver& q) {
    DynkinClass dc = classify_dynkin(q);
    KOTHE_CHECK(dc.is_dynkin(), "positive_roots requires a Dynkin quiver");
    const std::size_t n = q.num_vertices();
    std::set<DimVector> seen;
    std::vector<DimVector> queue;
    for (std::size_t i = 0; i < n; ++i) {
        DimVector e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    constexpr std::size_t kCap = 100000;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        DimVector d = queue[head];
        for (std::size_t v = 0; v < n; ++v) {
            DimVector r = simple_reflection(q, v, d);
            if (std::any_of(r.begin(), r.end(), [](long x) { return x < 0; })) continue;
            if (seen.insert(r).second) {
                queue.push_back(r);
                KOTHE_CHECK(queue.size() <= kCap, "root enumeration exceeded cap");
            }
        }
    }
    std::vector<DimVector> out(seen.begin(), seen.end());
    for (const DimVector& d : out)
        KOTHE_CHECK(tits_form(q, d) == 1, "internal: non-root in reflection closure");
    KOTHE_CHECK(out.size() == root_count(dc), "internal: root count mismatch");
    return out;
}

std::size_t root_count(const DynkinClass& d) {
    std::size_t n = static_cast<std::size_t>(d.n);
    switch (d.type) {
        case DynkinClass::Type::A: return n * (n + 1) / 2;
        case DynkinClass::Type::D: return n * (n - 1);
        case DynkinClass::Type::E: return d.n == 6 ? 36 : (d.n == 7 ? 63 : 120);
        default: throw Error("root_count on NotDynkin");
    }
}

}  // namespace kothe::qv
