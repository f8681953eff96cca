#include "homhopf/format.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace homhopf {

namespace {

struct Token {
    std::string text;
    std::size_t col;
};

struct Line {
    std::size_t no;
    std::vector<Token> tokens;
    const Token& operator[](std::size_t i) const { return tokens[i]; }
    std::size_t size() const { return tokens.size(); }
};

std::vector<Line> lex(std::string_view text) {
    std::vector<Line> out;
    std::size_t no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos) stop = text.size();
        std::string_view raw = text.substr(start, stop - start);
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        Line line{no, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
            if (j > i) line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
            i = j;
        }
        if (!line.tokens.empty() && line.tokens[0].text[0] != '#') out.push_back(std::move(line));
        if (stop == text.size()) break;
        start = stop + 1;
    }
    return out;
}

std::size_t parse_index(const Line& l, std::size_t t) {
    const Token& tok = l[t];
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ptr != tok.text.data() + tok.text.size() || tok.text.empty() || tok.text[0] == '-' ||
        tok.text[0] == '+')
        throw ParseError(l.no, tok.col, "expected a non-negative integer, got '" + tok.text + "'");
    if (ec == std::errc::result_out_of_range) throw RangeError(l.no, tok.col, "index '" + tok.text + "' is too large");
    return v;
}

Scalar parse_coefficient(const Line& l, std::size_t t) {
    try {
        return parse_scalar(l[t].text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(l.no, l[t].col, e.what());
    }
}

struct Entry {
    std::vector<std::size_t> index;
    Scalar value;
    std::size_t line;
    std::vector<std::size_t> cols;
};

struct Block {
    std::string kind;
    std::size_t line;
    std::size_t col;
    std::size_t arity;
    std::vector<Entry> entries;
};

std::size_t block_arity(const std::string& kind) {
    if (kind == "mul" || kind == "comul" || kind == "action" || kind == "coaction") return 3;
    if (kind == "unit" || kind == "counit") return 1;
    if (kind == "alpha" || kind == "antipode" || kind == "rmatrix" || kind == "cocycle" || kind == "pairing")
        return 2;
    return 0;
}

class DocumentParser {
public:
    DocumentParser(const std::vector<Line>& lines, std::size_t begin, std::size_t end, int depth)
        : lines_(lines), pos_(begin), end_(end), depth_(depth) {}

    AlgebraFile parse() {
        if (pos_ >= end_) throw ParseError(1, 1, "empty document");
        parse_header();
        while (pos_ < end_) parse_block();
        return assemble();
    }

private:
    const Line& next() { return lines_[pos_++]; }

    void parse_header() {
        const Line& h = next();
        if (h[0].text != "homhopf") throw ParseError(h.no, h[0].col, "expected 'homhopf <version>'");
        if (h.size() != 2) throw ParseError(h.no, h[0].col, "expected 'homhopf <version>'");
        if (h[1].text != "1") throw ParseError(h.no, h[1].col, "unsupported schema version '" + h[1].text + "'");
        header_line_ = h.no;

        while (pos_ < end_) {
            const Line& l = lines_[pos_];
            const std::string& key = l[0].text;
            if (key != "name" && key != "field_char" && key != "dim" && key != "basis") break;
            ++pos_;
            if (!seen_.insert(key).second) throw DuplicateEntry(l.no, l[0].col, "header key '" + key + "' repeated");
            if (key == "name") {
                if (l.size() != 2) throw ParseError(l.no, l[0].col, "name takes exactly one token");
                name_ = l[1].text;
            } else if (key == "field_char") {
                if (l.size() != 2) throw ParseError(l.no, l[0].col, "field_char takes exactly one value");
                if (l[1].text != "0") throw ParseError(l.no, l[1].col, "only characteristic 0 is supported");
            } else if (key == "dim") {
                if (l.size() != 2) throw ParseError(l.no, l[0].col, "dim takes exactly one value");
                dim_ = parse_index(l, 1);
                if (dim_ == 0) throw ParseError(l.no, l[1].col, "dimension must be positive");
            } else {
                basis_line_ = &l;
                for (std::size_t i = 1; i < l.size(); ++i) basis_.push_back(l[i].text);
            }
        }
        for (const char* key : {"name", "field_char", "dim", "basis"})
            if (!seen_.count(key)) throw ParseError(header_line_, 1, std::string("missing header line '") + key + "'");
        if (basis_.size() != dim_)
            throw ParseError(basis_line_->no, basis_line_->tokens[0].col,
                             "basis has " + std::to_string(basis_.size()) + " labels, expected " +
                                 std::to_string(dim_));
    }

    void parse_block() {
        const Line& l = next();
        const std::string& kind = l[0].text;
        if (kind == "partner") {
            if (depth_ > 0) throw ParseError(l.no, l[0].col, "partner documents cannot be nested");
            if (l.size() != 1) throw ParseError(l.no, l[1].col, "unexpected token after 'partner'");
            if (partner_) throw DuplicateEntry(l.no, l[0].col, "block 'partner' repeated");
            std::size_t stop = pos_;
            while (stop < end_ && lines_[stop][0].text != "endpartner") ++stop;
            if (stop == end_) throw ParseError(l.no, l[0].col, "partner block is not terminated by 'endpartner'");
            if (lines_[stop].size() != 1)
                throw ParseError(lines_[stop].no, lines_[stop][1].col, "unexpected token after 'endpartner'");
            partner_ = std::make_shared<AlgebraFile>(DocumentParser(lines_, pos_, stop, depth_ + 1).parse());
            pos_ = stop + 1;
            return;
        }
        const std::size_t arity = block_arity(kind);
        if (arity == 0) throw ParseError(l.no, l[0].col, "unknown block '" + kind + "'");
        if (kind == "cocycle") {
            if (l.size() != 2) throw ParseError(l.no, l[0].col, "expected 'cocycle left' or 'cocycle right'");
            if (l[1].text == "left")
                side_ = Side::left;
            else if (l[1].text == "right")
                side_ = Side::right;
            else
                throw ParseError(l.no, l[1].col, "cocycle side must be 'left' or 'right'");
        } else if (l.size() != 1) {
            throw ParseError(l.no, l[1].col, "unexpected token after '" + kind + "'");
        }
        if (blocks_.count(kind)) throw DuplicateEntry(l.no, l[0].col, "block '" + kind + "' repeated");

        Block b{kind, l.no, l[0].col, arity, {}};
        std::map<std::vector<std::size_t>, std::size_t> seen;
        for (;;) {
            if (pos_ >= end_) throw ParseError(l.no, l[0].col, "block '" + kind + "' is not terminated by 'end'");
            const Line& e = next();
            if (e[0].text == "end") {
                if (e.size() != 1) throw ParseError(e.no, e[1].col, "unexpected token after 'end'");
                break;
            }
            if (e.size() != arity + 1)
                throw ParseError(e.no, e[0].col,
                                 "expected " + std::to_string(arity) + " indices and a coefficient in block '" +
                                     kind + "'");
            Entry entry{{}, 0, e.no, {}};
            for (std::size_t t = 0; t < arity; ++t) {
                entry.index.push_back(parse_index(e, t));
                entry.cols.push_back(e[t].col);
            }
            entry.value = parse_coefficient(e, arity);
            if (auto [it, inserted] = seen.emplace(entry.index, e.no); !inserted)
                throw DuplicateEntry(e.no, e[0].col,
                                     "index repeated in block '" + kind + "' (first at line " +
                                         std::to_string(it->second) + ")");
            b.entries.push_back(std::move(entry));
        }
        blocks_.emplace(kind, std::move(b));
    }

    const Block& block(const std::string& kind, const std::vector<std::size_t>& shape) {
        const Block& b = blocks_.at(kind);
        for (const auto& e : b.entries)
            for (std::size_t t = 0; t < shape.size(); ++t)
                if (e.index[t] >= shape[t])
                    throw RangeError(e.line, e.cols[t],
                                     "index " + std::to_string(e.index[t]) + " in block '" + kind +
                                         "' exceeds bound " + std::to_string(shape[t]));
        return b;
    }

    Tensor3 tensor(const std::string& kind, std::size_t a, std::size_t b, std::size_t c) {
        Tensor3 t(a, b, c);
        for (const auto& e : block(kind, {a, b, c}).entries) t(e.index[0], e.index[1], e.index[2]) = e.value;
        return t;
    }

    Matrix matrix(const std::string& kind, std::size_t r, std::size_t c) {
        Matrix m(r, c);
        for (const auto& e : block(kind, {r, c}).entries) m(e.index[0], e.index[1]) = e.value;
        return m;
    }

    Vector vector(const std::string& kind, std::size_t n) {
        Vector v(n);
        for (const auto& e : block(kind, {n}).entries) v[e.index[0]] = e.value;
        return v;
    }

    bool has(const std::string& kind) const { return blocks_.count(kind) > 0; }

    [[noreturn]] void missing(const std::string& what) const { throw ParseError(header_line_, 1, what); }

    AlgebraFile assemble() {
        const std::size_t n = dim_;
        for (const char* req : {"mul", "unit", "alpha"})
            if (!has(req)) missing(std::string("missing required block '") + req + "'");
        if (has("comul") != has("counit")) missing("blocks 'comul' and 'counit' must appear together");
        if (has("antipode") && !has("comul")) missing("block 'antipode' needs 'comul' and 'counit'");
        for (const char* dep : {"action", "coaction", "pairing"})
            if (has(dep) && !partner_) {
                const Block& b = blocks_.at(dep);
                throw ParseError(b.line, b.col, std::string("block '") + dep + "' needs a partner document");
            }

        AlgebraFile f;
        f.name = name_;
        f.basis = basis_;
        f.mul = tensor("mul", n, n, n);
        f.unit = vector("unit", n);
        f.alpha = matrix("alpha", n, n);
        if (has("comul")) {
            f.comul = tensor("comul", n, n, n);
            f.counit = vector("counit", n);
        }
        if (has("antipode")) f.antipode = matrix("antipode", n, n);
        if (has("rmatrix")) f.rmatrix = matrix("rmatrix", n, n);
        if (has("cocycle")) {
            f.cocycle = matrix("cocycle", n, n);
            f.cocycle_side = side_;
        }
        if (partner_) {
            const std::size_t np = partner_->dim();
            f.partner = partner_;
            if (has("action")) f.action = tensor("action", np, n, n);
            if (has("coaction")) f.coaction = tensor("coaction", np, np, n);
            if (has("pairing")) f.pairing = matrix("pairing", n, np);
        }
        // structural validation: shapes and an invertible structure map
        if (f.has_coalgebra())
            f.bialgebra();
        else
            f.algebra();
        return f;
    }

    const std::vector<Line>& lines_;
    std::size_t pos_;
    std::size_t end_;
    int depth_;
    std::size_t header_line_ = 1;
    std::set<std::string> seen_;
    std::string name_;
    std::size_t dim_ = 0;
    std::vector<std::string> basis_;
    const Line* basis_line_ = nullptr;
    std::optional<Side> side_;
    std::map<std::string, Block> blocks_;
    std::shared_ptr<const AlgebraFile> partner_;
};

std::string token_safe(std::string s) {
    if (s.empty()) return "_";
    for (char& c : s)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') c = '_';
    if (s[0] == '#') s.insert(s.begin(), '_');
    return s;
}

void write_tensor(std::ostream& os, const std::string& kind, const Tensor3& t) {
    os << kind << "\n";
    for (std::size_t i = 0; i < t.dim1(); ++i)
        for (std::size_t j = 0; j < t.dim2(); ++j)
            for (std::size_t k = 0; k < t.dim3(); ++k)
                if (sgn(t(i, j, k)) != 0) os << i << " " << j << " " << k << " " << format_scalar(t(i, j, k)) << "\n";
    os << "end\n";
}

void write_matrix(std::ostream& os, const std::string& header, const Matrix& m) {
    os << header << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) os << i << " " << j << " " << format_scalar(m(i, j)) << "\n";
    os << "end\n";
}

void write_vector(std::ostream& os, const std::string& kind, const Vector& v) {
    os << kind << "\n";
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) os << i << " " << format_scalar(v[i]) << "\n";
    os << "end\n";
}

void write_document(std::ostream& os, const AlgebraFile& f) {
    os << "homhopf 1\n";
    os << "name " << token_safe(f.name) << "\n";
    os << "field_char 0\n";
    os << "dim " << f.dim() << "\n";
    os << "basis";
    for (const auto& b : f.basis) os << " " << token_safe(b);
    os << "\n";
    write_tensor(os, "mul", f.mul);
    write_vector(os, "unit", f.unit);
    if (f.comul) write_tensor(os, "comul", *f.comul);
    if (f.counit) write_vector(os, "counit", *f.counit);
    write_matrix(os, "alpha", f.alpha);
    if (f.antipode) write_matrix(os, "antipode", *f.antipode);
    if (f.rmatrix) write_matrix(os, "rmatrix", *f.rmatrix);
    if (f.cocycle) write_matrix(os, "cocycle " + to_string(f.cocycle_side.value_or(Side::left)), *f.cocycle);
    if (f.partner) {
        os << "partner\n";
        write_document(os, *f.partner);
        os << "endpartner\n";
        if (f.action) write_tensor(os, "action", *f.action);
        if (f.coaction) write_tensor(os, "coaction", *f.coaction);
        if (f.pairing) write_matrix(os, "pairing", *f.pairing);
    }
}

template <class T>
bool same_optional(const std::optional<T>& a, const std::optional<T>& b) {
    return a.has_value() == b.has_value() && (!a || *a == *b);
}

}  // namespace

HomAlgebra AlgebraFile::algebra() const { return HomAlgebra(mul, unit, alpha); }

HomBialgebra AlgebraFile::bialgebra() const {
    if (!comul || !counit) throw InvalidParameter("'" + name + "' has no comultiplication");
    return HomBialgebra(algebra(), HomCoalgebra(*comul, *counit, alpha));
}

HomHopfAlgebra AlgebraFile::hopf() const {
    if (!antipode) throw InvalidParameter("'" + name + "' has no antipode");
    return HomHopfAlgebra(bialgebra(), *antipode);
}

bool AlgebraFile::operator==(const AlgebraFile& o) const {
    if (name != o.name || basis != o.basis || !(mul == o.mul) || !(unit == o.unit) || !(alpha == o.alpha))
        return false;
    if (!same_optional(comul, o.comul) || !same_optional(counit, o.counit) || !same_optional(antipode, o.antipode))
        return false;
    if (!same_optional(rmatrix, o.rmatrix) || !same_optional(cocycle, o.cocycle) || cocycle_side != o.cocycle_side)
        return false;
    if (!same_optional(action, o.action) || !same_optional(coaction, o.coaction) || !same_optional(pairing, o.pairing))
        return false;
    if (bool(partner) != bool(o.partner)) return false;
    return !partner || *partner == *o.partner;
}

std::vector<std::string> default_basis(std::size_t n, const std::string& prefix) {
    std::vector<std::string> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(prefix + std::to_string(i));
    return b;
}

AlgebraFile file_from_algebra(const std::string& name, const HomAlgebra& A, std::vector<std::string> basis) {
    if (basis.empty()) basis = default_basis(A.dim());
    if (basis.size() != A.dim()) throw DimensionMismatch("basis label count differs from the dimension");
    AlgebraFile f;
    f.name = name;
    f.basis = std::move(basis);
    f.mul = A.mul();
    f.unit = A.unit();
    f.alpha = A.alpha();
    return f;
}

AlgebraFile file_from_bialgebra(const std::string& name, const HomBialgebra& B, std::vector<std::string> basis) {
    AlgebraFile f = file_from_algebra(name, B.algebra(), std::move(basis));
    f.comul = B.comul();
    f.counit = B.counit();
    return f;
}

AlgebraFile file_from_hopf(const std::string& name, const HomHopfAlgebra& H, std::vector<std::string> basis) {
    AlgebraFile f = file_from_bialgebra(name, H.bialgebra(), std::move(basis));
    f.antipode = H.antipode();
    return f;
}

AlgebraFile file_from_entry(const CatalogEntry& e) {
    AlgebraFile f = file_from_hopf(e.name, e.hopf, e.basis);
    if (e.rmatrix) f.rmatrix = e.rmatrix->entries;
    if (e.partner) {
        f.partner = std::make_shared<AlgebraFile>(
            file_from_hopf(e.name + "_partner", *e.partner, default_basis(e.partner->dim(), "p")));
        if (e.action) f.action = e.action->act;
        if (e.coaction) f.coaction = e.coaction->coact;
    }
    return f;
}

CatalogEntry entry_from_file(const AlgebraFile& f) {
    CatalogEntry e{f.name, f.basis, f.hopf(), std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    if (f.rmatrix) e.rmatrix.emplace(e.hopf.bialgebra(), *f.rmatrix);
    if (f.partner && f.partner->has_antipode()) {
        e.partner = f.partner->hopf();
        if (f.action) e.action.emplace(e.partner->bialgebra(), e.hopf.bialgebra(), *f.action);
        if (f.coaction) e.coaction.emplace(e.hopf.bialgebra(), e.partner->bialgebra(), *f.coaction);
    }
    return e;
}

AlgebraFile parse_algebra_file(std::string_view text) {
    std::vector<Line> lines = lex(text);
    return DocumentParser(lines, 0, lines.size(), 0).parse();
}

std::string serialize_algebra_file(const AlgebraFile& f) {
    std::ostringstream os;
    write_document(os, f);
    return os.str();
}

AlgebraFile load_algebra(const std::string& path_or_name) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(path_or_name, ec)) {
        std::ifstream in(path_or_name, std::ios::binary);
        if (!in) throw IoError("cannot open '" + path_or_name + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_algebra_file(buf.str());
    }
    CatalogEntry e = [&] {
        try {
            return catalog_lookup(path_or_name);
        } catch (const InvalidParameter& err) {
            throw IoError("no such file or catalog entry '" + path_or_name + "' (" + err.what() + ")");
        }
    }();
    return file_from_entry(e);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("write to '" + path + "' failed");
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

}  // namespace homhopf
