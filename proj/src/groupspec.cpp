#include "harmseq/groupspec.hpp"

#include <cctype>
#include <numeric>

#include "harmseq/errors.hpp"
#include "harmseq/table_io.hpp"

namespace harmseq {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw InputError(msg + " at offset " + std::to_string(pos), pos); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }

    bool peek_word(std::string_view w) {
        skip_ws();
        return text.substr(pos, w.size()) == w;
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        long long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000'000LL) { pos = start; fail("integer too large"); }
        }
        return v;
    }

    GroupSpecAST::NodePtr atom() {
        skip_ws();
        if (pos >= text.size()) fail("expected a group atom");
        if (peek_word("SD(")) {
            pos += 3;
            auto k = spec();
            if (!eat(';')) fail("expected ';' after the acting factor");
            auto h = spec();
            if (!eat(';')) fail("expected ';' before the multipliers");
            std::vector<long long> mults{integer()};
            while (eat(',')) mults.push_back(integer());
            if (!eat(')')) fail("expected ')'");
            validate_sd(k, h, mults);
            return node(GroupSpecAST::Semidirect{std::move(k), std::move(h), std::move(mults)});
        }
        if (peek_word("Table(")) {
            pos += 6;
            std::size_t start = pos;
            while (pos < text.size() && text[pos] != ')') ++pos;
            if (pos >= text.size()) fail("unterminated Table(");
            std::string path(text.substr(start, pos - start));
            ++pos;  // ')'
            while (!path.empty() && std::isspace(static_cast<unsigned char>(path.front()))) path.erase(path.begin());
            while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
            if (path.empty()) fail("empty Table path");
            return node(GroupSpecAST::Table{std::move(path)});
        }
        char c = text[pos];
        if (c == 'Z') {
            ++pos;
            long long n = integer();
            if (n < 1) fail("cyclic order must be >= 1");
            return node(GroupSpecAST::Cyclic{static_cast<int>(n)});
        }
        if (c == 'D') {
            ++pos;
            std::size_t at = pos;
            long long n = integer();
            if (n % 2 != 0 || n < 4) { pos = at; fail("dihedral order must be even and >= 4"); }
            return node(GroupSpecAST::Dihedral{static_cast<int>(n)});
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    GroupSpecAST::NodePtr spec() {
        auto left = atom();
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                auto right = atom();
                left = node(GroupSpecAST::Product{std::move(left), std::move(right)});
            } else {
                break;
            }
        }
        return left;
    }

    void validate_sd(const GroupSpecAST::NodePtr& k, const GroupSpecAST::NodePtr& h,
                     const std::vector<long long>& mults) {
        const auto* hc = std::get_if<GroupSpecAST::Cyclic>(&h->v);
        if (!hc) fail("SD requires a cyclic normal factor H");
        std::vector<int> orders;
        collect_cyclic_orders(k, orders);
        if (orders.size() != mults.size())
            fail("SD needs one multiplier per cyclic factor of K (" + std::to_string(orders.size()) +
                 " factors, " + std::to_string(mults.size()) + " multipliers)");
        for (std::size_t i = 0; i < mults.size(); ++i) {
            long long m = ((mults[i] % hc->n) + hc->n) % hc->n;
            if (std::gcd(static_cast<long long>(hc->n), m) != 1)
                fail("multiplier " + std::to_string(mults[i]) + " is not a unit mod " +
                     std::to_string(hc->n));
            long long acc = 1 % hc->n;
            for (int t = 0; t < orders[i]; ++t) acc = acc * m % hc->n;
            if (acc != 1 % hc->n)
                fail("multiplier " + std::to_string(mults[i]) + " does not satisfy m^" +
                     std::to_string(orders[i]) + " = 1 mod " + std::to_string(hc->n));
        }
    }

    void collect_cyclic_orders(const GroupSpecAST::NodePtr& n, std::vector<int>& out) {
        if (const auto* c = std::get_if<GroupSpecAST::Cyclic>(&n->v)) {
            out.push_back(c->n);
        } else if (const auto* p = std::get_if<GroupSpecAST::Product>(&n->v)) {
            collect_cyclic_orders(p->a, out);
            collect_cyclic_orders(p->b, out);
        } else {
            fail("SD's acting factor K must be a cyclic group or a product of cyclic groups");
        }
    }

    static GroupSpecAST::NodePtr node(auto&& v) {
        return std::make_shared<const GroupSpecAST::Node>(
            GroupSpecAST::Node{std::forward<decltype(v)>(v)});
    }
};

std::string print_node(const GroupSpecAST::NodePtr& n) {
    struct V {
        std::string operator()(const GroupSpecAST::Cyclic& c) const { return "Z" + std::to_string(c.n); }
        std::string operator()(const GroupSpecAST::Dihedral& d) const { return "D" + std::to_string(d.order); }
        std::string operator()(const GroupSpecAST::Product& p) const {
            return print_node(p.a) + "x" + print_node(p.b);
        }
        std::string operator()(const GroupSpecAST::Semidirect& s) const {
            std::string out = "SD(" + print_node(s.k) + ";" + print_node(s.h) + ";";
            for (std::size_t i = 0; i < s.multipliers.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(s.multipliers[i]);
            }
            return out + ")";
        }
        std::string operator()(const GroupSpecAST::Table& t) const { return "Table(" + t.path + ")"; }
    };
    return std::visit(V{}, n->v);
}

GroupPtr realize_node(const GroupSpecAST::NodePtr& n) {
    struct V {
        GroupPtr operator()(const GroupSpecAST::Cyclic& c) const { return make_cyclic(c.n); }
        GroupPtr operator()(const GroupSpecAST::Dihedral& d) const { return make_dihedral(d.order); }
        GroupPtr operator()(const GroupSpecAST::Product& p) const {
            return make_direct_product(realize_node(p.a), realize_node(p.b));
        }
        GroupPtr operator()(const GroupSpecAST::Semidirect& s) const {
            std::vector<int> orders;
            collect(s.k, orders);
            int h_order = std::get<GroupSpecAST::Cyclic>(s.h->v).n;
            return make_semidirect_cyclic(orders, h_order, s.multipliers);
        }
        GroupPtr operator()(const GroupSpecAST::Table& t) const {
            return load_cayley_table_file(t.path);
        }
        static void collect(const GroupSpecAST::NodePtr& n, std::vector<int>& out) {
            if (const auto* c = std::get_if<GroupSpecAST::Cyclic>(&n->v)) out.push_back(c->n);
            else if (const auto* p = std::get_if<GroupSpecAST::Product>(&n->v)) {
                collect(p->a, out);
                collect(p->b, out);
            }
        }
    };
    return std::visit(V{}, n->v);
}

}  // namespace

GroupSpecAST parse_group_spec(std::string_view text) {
    Parser p{text};
    GroupSpecAST ast;
    ast.root = p.spec();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after group spec");
    return ast;
}

std::string canonical_spec(const GroupSpecAST& ast) { return print_node(ast.root); }

GroupPtr realize_group(const GroupSpecAST& ast) { return realize_node(ast.root); }

}  // namespace harmseq
