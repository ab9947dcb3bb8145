#include "tracekit/session.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include "tracekit/analysis.hpp"

namespace tracekit {

namespace {

struct Token {
  enum Kind { Ident, Int, Punct, End } kind = End;
  std::string text;
  int line = 1, col = 1;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t pos = 0;
  int line = 1, col = 1;
  auto adv = [&] {
    if (s[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  };
  const std::string punct = "=()[],;/-+*^";
  while (pos < s.size()) {
    char c = s[pos];
    if (c == '#') {
      while (pos < s.size() && s[pos] != '\n') adv();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv();
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Ident;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) ||
              s[pos] == '_')) {
        t.text += s[pos];
        adv();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Int;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos]))) {
        t.text += s[pos];
        adv();
      }
    } else if (punct.find(c) != std::string::npos) {
      t.kind = Token::Punct;
      t.text = c;
      adv();
    } else {
      throw SessionError(line, col,
                         std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

struct Pending {
  enum Type { Plain, Verify, Report } type = Plain;
  std::function<std::string()> plain;
  std::function<VerificationReport()> verify;
};

struct Session {
  const SessionOptions& opts;
  std::vector<Token> toks;
  std::size_t at = 0;

  std::map<std::string, AmbientRingPtr> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, FPModule> modules;
  std::map<std::string, ModuleHomomorphism> homs;
  std::vector<Pending> pending;

  explicit Session(const std::string& text, const SessionOptions& o)
      : opts(o), toks(lex(text)) {}

  const Token& peek() const { return toks[at]; }
  Token next() { return toks[at++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw SessionError(t.line, t.col, msg);
  }
  bool at_punct(const std::string& p) const {
    return peek().kind == Token::Punct && peek().text == p;
  }
  void expect_punct(const std::string& p) {
    if (!at_punct(p)) fail(peek(), "expected '" + p + "'");
    next();
  }
  std::string expect_ident(const std::string& what) {
    if (peek().kind != Token::Ident) fail(peek(), "expected " + what);
    return next().text;
  }
  int expect_int(const std::string& what) {
    if (peek().kind != Token::Int) fail(peek(), "expected " + what);
    return std::stoi(next().text);
  }

  void check_fresh(const std::string& name, const Token& t) {
    if (rings.count(name) || ideals.count(name) || modules.count(name) ||
        homs.count(name))
      fail(t, "duplicate name '" + name + "'");
  }
  AmbientRingPtr get_ring(const Token& t, const std::string& name) {
    auto it = rings.find(name);
    if (it == rings.end()) fail(t, "unknown ring '" + name + "'");
    return it->second;
  }
  Ideal get_ideal(const Token& t, const std::string& name) {
    auto it = ideals.find(name);
    if (it == ideals.end()) fail(t, "unknown ideal '" + name + "'");
    return it->second;
  }
  FPModule get_module(const Token& t, const std::string& name) {
    auto it = modules.find(name);
    if (it == modules.end()) fail(t, "unknown module '" + name + "'");
    return it->second;
  }

  // Collects a polynomial expression up to a top-level ',' or closing
  // delimiter and parses it over the given ring's variables.
  Polynomial read_poly(const PolyRingPtr& poly) {
    Token start = peek();
    std::string text;
    int depth = 0;
    while (true) {
      const Token& t = peek();
      if (t.kind == Token::End) fail(t, "unterminated expression");
      if (t.kind == Token::Punct) {
        if (depth == 0 && (t.text == "," || t.text == ")" || t.text == "]" ||
                           t.text == ";"))
          break;
        if (t.text == "(" || t.text == "[") ++depth;
        if (t.text == ")" || t.text == "]") --depth;
      }
      text += t.text;
      text += ' ';
      next();
    }
    if (text.empty()) fail(start, "expected a polynomial");
    try {
      return parse_polynomial(poly, text);
    } catch (const std::exception& e) {
      fail(start, e.what());
    }
  }

  std::vector<Polynomial> read_poly_list(const PolyRingPtr& poly) {
    expect_punct("(");
    std::vector<Polynomial> out;
    if (!at_punct(")")) {
      while (true) {
        out.push_back(read_poly(poly));
        if (at_punct(",")) {
          next();
          continue;
        }
        break;
      }
    }
    expect_punct(")");
    return out;
  }

  RMat read_matrix(const AmbientRingPtr& ring) {
    Token start = peek();
    expect_punct("[");
    std::vector<std::vector<Polynomial>> rows;
    while (true) {
      expect_punct("[");
      std::vector<Polynomial> row;
      if (!at_punct("]")) {
        while (true) {
          row.push_back(read_poly(ring->poly_ring()));
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
      }
      expect_punct("]");
      rows.push_back(std::move(row));
      if (at_punct(",")) {
        next();
        continue;
      }
      break;
    }
    expect_punct("]");
    if (rows.empty()) fail(start, "empty matrix");
    std::size_t width = rows[0].size();
    for (const auto& r : rows)
      if (r.size() != width) fail(start, "ragged matrix rows");
    RMat out(ring, int(rows.size()), int(width));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < width; ++c)
        out.at(int(r), int(c)) = RingElement(ring, rows[r][c]);
    return out;
  }

  void run_all() {
    while (peek().kind != Token::End) statement();
  }

  void statement() {
    Token head = peek();
    if (head.kind != Token::Ident) fail(head, "expected a statement");
    std::string verb = next().text;
    // Hyphenated verbs: is-reflexive, has-free-summand, ...
    while (at_punct("-")) {
      next();
      verb += "-" + expect_ident("verb continuation");
    }
    if (verb == "ring")
      stmt_ring();
    else if (verb == "ideal")
      stmt_ideal();
    else if (verb == "module")
      stmt_module();
    else if (verb == "let")
      stmt_let();
    else
      command(head, verb);
    expect_punct(";");
  }

  void stmt_ring() {
    Token nt = peek();
    std::string name = expect_ident("ring name");
    check_fresh(name, nt);
    expect_punct("=");
    Token ft = peek();
    std::string field = expect_ident("field spec like F32003");
    if (field.size() < 2 || field[0] != 'F' ||
        field.find_first_not_of("0123456789", 1) != std::string::npos)
      fail(ft, "expected a field spec like F32003");
    std::uint32_t p = std::uint32_t(std::stoul(field.substr(1)));
    if (opts.prime_override) p = *opts.prime_override;
    if (!PrimeField::is_prime(p))
      fail(ft, "modulus " + std::to_string(p) + " is not prime");
    expect_punct("[");
    std::vector<std::string> vars;
    while (true) {
      vars.push_back(expect_ident("variable name"));
      if (at_punct(",")) {
        next();
        continue;
      }
      break;
    }
    expect_punct("]");
    PolyRingPtr poly;
    try {
      poly = PolyRing::make(p, vars);
    } catch (const std::exception& e) {
      fail(nt, e.what());
    }
    std::vector<Polynomial> rels;
    if (at_punct("/")) {
      next();
      rels = read_poly_list(poly);
    }
    bool domain = false;
    if (peek().kind == Token::Ident && peek().text == "domain") {
      next();
      domain = true;
    }
    try {
      rings[name] = AmbientRing::make(poly, std::move(rels), domain);
    } catch (const std::exception& e) {
      fail(nt, e.what());
    }
  }

  void stmt_ideal() {
    Token nt = peek();
    std::string name = expect_ident("ideal name");
    check_fresh(name, nt);
    expect_punct("=");
    // Generators are parsed after the ring is known; remember the span.
    std::size_t save = at;
    expect_punct("(");
    int depth = 1;
    while (depth > 0) {
      const Token& t = peek();
      if (t.kind == Token::End) fail(t, "unterminated generator list");
      if (t.kind == Token::Punct && t.text == "(") ++depth;
      if (t.kind == Token::Punct && t.text == ")") --depth;
      next();
    }
    Token ot = peek();
    if (expect_ident("'over'") != "over") fail(ot, "expected 'over'");
    Token rt = peek();
    AmbientRingPtr ring = get_ring(rt, expect_ident("ring name"));
    std::size_t after = at;
    at = save;
    std::vector<Polynomial> gens = read_poly_list(ring->poly_ring());
    at = after;
    std::vector<RingElement> es;
    for (const Polynomial& g : gens) {
      RingElement e(ring, g);
      if (!e.is_zero()) es.push_back(e);
    }
    ideals[name] = Ideal(ring, std::move(es));
  }

  void stmt_module() {
    Token nt = peek();
    std::string name = expect_ident("module name");
    check_fresh(name, nt);
    expect_punct("=");
    Token kt = peek();
    std::string kind = expect_ident("module form");
    if (kind == "coker") {
      std::size_t save = at;
      Token mt = peek();
      expect_punct("[");
      int depth = 1;
      while (depth > 0) {
        const Token& t = peek();
        if (t.kind == Token::End) fail(t, "unterminated matrix");
        if (t.kind == Token::Punct && t.text == "[") ++depth;
        if (t.kind == Token::Punct && t.text == "]") --depth;
        next();
      }
      Token ot = peek();
      if (expect_ident("'over'") != "over") fail(ot, "expected 'over'");
      AmbientRingPtr ring = get_ring(peek(), expect_ident("ring name"));
      std::size_t after = at;
      at = save;
      RMat pres = read_matrix(ring);
      at = after;
      (void)mt;
      modules[name] = FPModule::from_presentation(ring, std::move(pres));
    } else if (kind == "ideal") {
      Token it = peek();
      Ideal I = get_ideal(it, expect_ident("ideal name"));
      modules[name] = FPModule::from_ideal(I);
    } else if (kind == "free") {
      int rank = expect_int("free rank");
      Token ot = peek();
      if (expect_ident("'over'") != "over") fail(ot, "expected 'over'");
      AmbientRingPtr ring = get_ring(peek(), expect_ident("ring name"));
      modules[name] = FPModule::free_module(ring, rank);
    } else if (kind == "dual") {
      FPModule M = get_module(peek(), expect_ident("module name"));
      modules[name] = dual(M).module();
    } else if (kind == "tensor" || kind == "sum") {
      Token at1 = peek();
      FPModule M = get_module(at1, expect_ident("module name"));
      Token at2 = peek();
      FPModule N = get_module(at2, expect_ident("module name"));
      if (M.ring() != N.ring()) fail(at2, "modules live over different rings");
      modules[name] = kind == "tensor" ? tensor(M, N) : direct_sum(M, N);
    } else {
      fail(kt, "unknown module form '" + kind + "'");
    }
  }

  void stmt_let() {
    Token nt = peek();
    std::string name = expect_ident("homomorphism name");
    check_fresh(name, nt);
    expect_punct("=");
    Token kt = peek();
    if (expect_ident("'hom'") != "hom") fail(kt, "expected 'hom'");
    Token st = peek();
    FPModule src = get_module(st, expect_ident("source module"));
    Token tt = peek();
    FPModule tgt = get_module(tt, expect_ident("target module"));
    if (src.ring() != tgt.ring()) fail(tt, "modules live over different rings");
    Token mt = peek();
    RMat mat = read_matrix(src.ring());
    if (mat.rows() != tgt.gen_count() || mat.cols() != src.gen_count())
      fail(mt, "matrix shape mismatch: expected " +
                   std::to_string(tgt.gen_count()) + "x" +
                   std::to_string(src.gen_count()));
    try {
      homs.emplace(name, ModuleHomomorphism(src, tgt, std::move(mat), true));
    } catch (const std::exception& e) {
      fail(mt, e.what());
    }
  }

  void push_plain(std::function<std::string()> f) {
    Pending p;
    p.type = Pending::Plain;
    p.plain = std::move(f);
    pending.push_back(std::move(p));
  }

  void command(const Token& head, const std::string& verb) {
    std::uint64_t seed = opts.seed;
    if (verb == "trace") {
      FPModule M = get_module(peek(), expect_ident("module name"));
      push_plain([M] { return trace_ideal(M).str(); });
    } else if (verb == "dual") {
      FPModule M = get_module(peek(), expect_ident("module name"));
      push_plain([M] {
        DualModule D = dual(M);
        std::ostringstream os;
        os << "dual: " << D.hom.gen_count() << " generator(s)";
        if (D.hom.gen_count()) {
          os << ": ";
          for (int j = 0; j < D.hom.gen_count(); ++j) {
            if (j) os << ", ";
            os << "(";
            for (int i = 0; i < M.gen_count(); ++i) {
              if (i) os << ", ";
              os << D.values.at(i, j).str();
            }
            os << ")";
          }
        }
        return os.str();
      });
    } else if (verb == "hom") {
      FPModule M = get_module(peek(), expect_ident("module name"));
      FPModule N = get_module(peek(), expect_ident("module name"));
      push_plain([M, N] {
        HomModule H = hom_module(M, N);
        std::ostringstream os;
        os << "hom: " << H.gen_count() << " generator(s); annihilator "
           << annihilator(H.module()).str();
        return os.str();
      });
    } else if (verb == "end") {
      FPModule M = get_module(peek(), expect_ident("module name"));
      push_plain([M] {
        EndAlgebra E = end_algebra(M);
        std::ostringstream os;
        os << "end: " << E.hom.gen_count() << " generator(s); commutative: "
           << (E.is_commutative() ? "true" : "false") << "; annihilator "
           << annihilator(E.hom.module()).str();
        return os.str();
      });
    } else if (verb == "center") {
      FPModule M = get_module(peek(), expect_ident("module name"));
      push_plain([M] {
        CenterData cd = center_of_end(M);
        std::ostringstream os;
        os << "center: " << cd.generators.size()
           << " generator(s); multiplications by ring elements: "
           << (cd.scalar ? "true" : "false");
        return os.str();
      });
    } else if (verb == "grade") {
      Ideal I = get_ideal(peek(), expect_ident("ideal name"));
      push_plain([I] { return grade(I).str(); });
    } else if (verb == "depth") {
      AmbientRingPtr R = get_ring(peek(), expect_ident("ring name"));
      push_plain([R] { return std::to_string(depth(R)); });
    } else if (verb == "dim") {
      AmbientRingPtr R = get_ring(peek(), expect_ident("ring name"));
      push_plain([R] { return std::to_string(R->krull_dimension()); });
    } else if (verb == "gorenstein") {
      AmbientRingPtr R = get_ring(peek(), expect_ident("ring name"));
      push_plain([R] { return is_gorenstein(R) ? "true" : "false"; });
    } else if (verb == "ext") {
      int i = expect_int("Ext index");
      FPModule M = get_module(peek(), expect_ident("module name"));
      FPModule N = get_module(peek(), expect_ident("module name"));
      push_plain([i, M, N] {
        ExtGroup e = ext(i, M, N);
        if (e.is_zero()) return std::string("0");
        std::ostringstream os;
        os << "nonzero: " << e.module.minimal_generators()
           << " minimal generator(s), annihilator "
           << annihilator(e.module).str();
        return os.str();
      });
    } else if (verb == "resolve") {
      FPModule M = get_module(peek(), expect_ident("module name"));
      int len = expect_int("resolution length");
      if (len < 1) fail(head, "resolution length must be >= 1");
      push_plain([M, len] {
        FreeResolution F = free_resolution(M, len);
        std::ostringstream os;
        os << "ranks:";
        for (int r : F.ranks) os << " " << r;
        for (int k = 0; k < F.length(); ++k)
          os << "\nd" << k + 1 << " = " << F.diffs[k].str();
        return os.str();
      });
    } else if (verb == "is-reflexive") {
      FPModule M = get_module(peek(), expect_ident("module name"));
      push_plain([M] { return is_reflexive(M) ? "true" : "false"; });
    } else if (verb == "is-rigid") {
      FPModule M = get_module(peek(), expect_ident("module name"));
      push_plain([M] { return is_rigid(M) ? "true" : "false"; });
    } else if (verb == "is-balanced") {
      FPModule M = get_module(peek(), expect_ident("module name"));
      push_plain([M] { return is_balanced(M) ? "true" : "false"; });
    } else if (verb == "has-free-summand") {
      FPModule M = get_module(peek(), expect_ident("module name"));
      push_plain([M] { return has_free_summand(M) ? "true" : "false"; });
    } else if (verb == "verify") {
      Token vt = peek();
      std::string tag = expect_ident("verify tag");
      while (at_punct("-")) {
        next();
        tag += "-" + expect_ident("verify tag");
      }
      Pending p;
      p.type = Pending::Verify;
      if (tag == "main") {
        FPModule M = get_module(peek(), expect_ident("module name"));
        p.verify = [M, seed] { return verify_theorem_main(M, seed); };
      } else if (tag == "main2") {
        FPModule M = get_module(peek(), expect_ident("module name"));
        p.verify = [M, seed] { return verify_theorem_main2(M, seed); };
      } else if (tag == "trace-props") {
        FPModule M = get_module(peek(), expect_ident("module name"));
        FPModule N = get_module(peek(), expect_ident("module name"));
        p.verify = [M, N, seed] { return verify_trace_properties(M, N, seed); };
      } else if (tag == "free-summand") {
        FPModule M = get_module(peek(), expect_ident("module name"));
        p.verify = [M, seed] { return verify_free_summand_theorems(M, seed); };
      } else if (tag == "rigidity") {
        FPModule M = get_module(peek(), expect_ident("module name"));
        p.verify = [M, seed] { return verify_rigidity_theorem(M, seed); };
      } else if (tag == "hw") {
        Ideal I = get_ideal(peek(), expect_ident("ideal name"));
        p.verify = [I, seed] { return hw_trace_check(I, seed); };
      } else {
        fail(vt, "unknown verify tag '" + tag + "'");
      }
      pending.push_back(std::move(p));
    } else if (verb == "report") {
      Pending p;
      p.type = Pending::Report;
      pending.push_back(std::move(p));
    } else {
      fail(head, "unknown statement '" + verb + "'");
    }
  }

  SessionResult execute() {
    run_all();
    int n = int(pending.size());
    std::vector<std::string> outputs(n);
    std::vector<std::optional<VerificationReport>> reports(n);

    auto eval_one = [&](int i) {
      Pending& p = pending[i];
      if (p.type == Pending::Plain) {
        outputs[i] = p.plain();
      } else if (p.type == Pending::Verify) {
        VerificationReport rep = p.verify();
        outputs[i] = opts.json ? rep.json() : rep.text();
        reports[i] = std::move(rep);
      }
    };

    int threads = std::max(1, std::min(opts.threads, 16));
    if (threads == 1 || n <= 1) {
      for (int i = 0; i < n; ++i) eval_one(i);
    } else {
      // Commands are pure; evaluate concurrently and merge in input order.
      std::atomic<int> cursor{0};
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(threads);
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            while (true) {
              int i = cursor.fetch_add(1);
              if (i >= n) break;
              eval_one(i);
            }
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }

    SessionResult res;
    bool any_fail = false, any_hnm = false;
    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
      if (pending[i].type == Pending::Report) {
        int pass = 0, hnm = 0, fail_count = 0;
        for (int j = 0; j < i; ++j) {
          if (!reports[j]) continue;
          switch (reports[j]->status) {
            case ReportStatus::Pass:
              ++pass;
              break;
            case ReportStatus::HypothesesNotMet:
              ++hnm;
              break;
            case ReportStatus::Fail:
              ++fail_count;
              break;
          }
        }
        os << "reports: " << pass << " pass, " << hnm
           << " hypotheses-not-met, " << fail_count << " fail\n";
        continue;
      }
      os << outputs[i];
      if (outputs[i].empty() || outputs[i].back() != '\n') os << "\n";
      if (reports[i]) {
        if (reports[i]->status == ReportStatus::Fail) any_fail = true;
        if (reports[i]->status == ReportStatus::HypothesesNotMet)
          any_hnm = true;
      }
    }
    res.output = os.str();
    res.exit_code = any_fail ? 3 : (any_hnm ? 2 : 0);
    return res;
  }
};

}  // namespace

SessionResult run_session(const std::string& text, const SessionOptions& opts) {
  try {
    Session s(text, opts);
    return s.execute();
  } catch (const std::exception& e) {
    return {std::string("error: ") + e.what() + "\n", 1};
  }
}

}  // namespace tracekit
