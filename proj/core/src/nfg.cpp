#include "nashd/nfg.hpp"

#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>

#include "nashd/format.hpp"

namespace nashd {

namespace {

const char* kind_label(NfgError::Kind kind) {
  switch (kind) {
    case NfgError::Kind::syntax: return "syntax error";
    case NfgError::Kind::arity: return "arity error";
    case NfgError::Kind::value: return "value error";
    case NfgError::Kind::unsupported_variant: return "unsupported variant";
  }
  return "error";
}

// Token scanner over the raw text, tracking line/column (1-based) for
// error reporting.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && is_space(text_[pos_])) {
      advance();
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  int line() const { return line_; }
  int column() const { return column_; }

  // Next run of non-space, non-brace, non-quote characters.
  std::string_view word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) &&
           text_[pos_] != '{' && text_[pos_] != '}' && text_[pos_] != '"') {
      advance();
    }
    return text_.substr(start, pos_ - start);
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect_char(char c, const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(NfgError::Kind::syntax, std::string("expected ") + what);
    }
    advance();
  }

  std::string quoted(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '"') {
      fail(NfgError::Kind::syntax, std::string("expected quoted ") + what);
    }
    advance();
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      out.push_back(text_[pos_]);
      advance();
    }
    if (pos_ >= text_.size()) {
      fail(NfgError::Kind::syntax, std::string("unterminated quoted ") + what);
    }
    advance();  // closing quote
    return out;
  }

  [[noreturn]] void fail(NfgError::Kind kind, const std::string& message) {
    throw NfgError(kind, message, line_, column_);
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\v';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

double parse_payoff(Scanner& scanner, std::string_view token) {
  std::string_view body = token;
  if (!body.empty() && body.front() == '+') {
    body.remove_prefix(1);
  }
  double value = 0.0;
  const auto res =
      std::from_chars(body.data(), body.data() + body.size(), value);
  if (res.ec != std::errc{} || res.ptr != body.data() + body.size()) {
    scanner.fail(NfgError::Kind::value,
                 "expected a numeric payoff, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

NfgError::NfgError(Kind kind, const std::string& message, int line, int column)
    : std::runtime_error(std::string(kind_label(kind)) + " at line " +
                         std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

NfgDocument parse_nfg_document(std::string_view text) {
  Scanner scanner(text);
  NfgDocument doc;

  if (scanner.word() != "NFG") {
    scanner.fail(NfgError::Kind::syntax, "expected header token 'NFG'");
  }
  if (scanner.word() != "1") {
    scanner.fail(NfgError::Kind::syntax, "expected version '1' after 'NFG'");
  }
  if (scanner.word() != "R") {
    scanner.fail(NfgError::Kind::syntax, "expected payoff marker 'R'");
  }
  doc.title = scanner.quoted("title");

  scanner.expect_char('{', "'{' opening the player list");
  while (scanner.peek() == '"') {
    doc.player_names.push_back(scanner.quoted("player name"));
  }
  scanner.expect_char('}', "'}' closing the player list");
  if (doc.player_names.empty()) {
    scanner.fail(NfgError::Kind::syntax, "player list is empty");
  }

  scanner.expect_char('{', "'{' opening the action counts");
  while (scanner.peek() != '}' && scanner.peek() != '\0') {
    const auto token = scanner.word();
    int count = 0;
    const auto res =
        std::from_chars(token.data(), token.data() + token.size(), count);
    if (token.empty() || res.ec != std::errc{} ||
        res.ptr != token.data() + token.size() || count < 1) {
      scanner.fail(NfgError::Kind::syntax,
                   "expected a positive action count, got '" +
                       std::string(token) + "'");
    }
    doc.action_counts.push_back(count);
  }
  scanner.expect_char('}', "'}' closing the action counts");
  if (doc.action_counts.size() != doc.player_names.size()) {
    scanner.fail(NfgError::Kind::syntax,
                 "found " + std::to_string(doc.action_counts.size()) +
                     " action counts for " +
                     std::to_string(doc.player_names.size()) + " players");
  }

  if (scanner.peek() == '{') {
    scanner.fail(NfgError::Kind::unsupported_variant,
                 "outcome-format .nfg files are not supported; only the "
                 "payoff format is accepted");
  }

  std::size_t expected = doc.player_names.size();
  for (int count : doc.action_counts) {
    expected *= static_cast<std::size_t>(count);
  }
  doc.payoffs.reserve(expected);
  while (!scanner.at_end()) {
    const auto token = scanner.word();
    if (token.empty()) {
      scanner.fail(NfgError::Kind::syntax, "unexpected character");
    }
    doc.payoffs.push_back(parse_payoff(scanner, token));
  }
  if (doc.payoffs.size() != expected) {
    scanner.fail(NfgError::Kind::arity,
                 "found " + std::to_string(doc.payoffs.size()) +
                     " payoffs, expected " + std::to_string(expected));
  }
  return doc;
}

NormalFormGame to_game(const NfgDocument& doc) {
  const int n = static_cast<int>(doc.action_counts.size());
  std::size_t profiles = 1;
  for (int count : doc.action_counts) {
    profiles *= static_cast<std::size_t>(count);
  }
  std::vector<std::vector<double>> payoffs(static_cast<std::size_t>(n),
                                           std::vector<double>(profiles));
  // File profile index advances player 0 fastest; the in-memory offset has
  // player 0 slowest.
  PureProfile actions(static_cast<std::size_t>(n), 0);
  for (std::size_t file_index = 0; file_index < profiles; ++file_index) {
    std::size_t offset = 0;
    for (int i = 0; i < n; ++i) {
      offset = offset * static_cast<std::size_t>(doc.action_counts
                                                      [static_cast<std::size_t>(
                                                          i)]) +
               static_cast<std::size_t>(actions[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < n; ++i) {
      payoffs[static_cast<std::size_t>(i)][offset] =
          doc.payoffs[file_index * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i) {  // increment, first player fastest
      if (++actions[static_cast<std::size_t>(i)] <
          doc.action_counts[static_cast<std::size_t>(i)]) {
        break;
      }
      actions[static_cast<std::size_t>(i)] = 0;
    }
  }
  return NormalFormGame(doc.action_counts, std::move(payoffs), doc.title);
}

NormalFormGame parse_nfg(std::string_view text) {
  return to_game(parse_nfg_document(text));
}

std::string serialize_nfg(const NormalFormGame& game) {
  std::string out = "NFG 1 R \"";
  for (char c : game.name()) {
    out.push_back(c == '"' ? '\'' : c);
  }
  out += "\"\n{";
  for (int i = 0; i < game.num_players(); ++i) {
    out += " \"P" + std::to_string(i + 1) + "\"";
  }
  out += " } {";
  for (int count : game.action_counts()) {
    out += " " + std::to_string(count);
  }
  out += " }\n\n";

  const int n = game.num_players();
  PureProfile actions(static_cast<std::size_t>(n), 0);
  const std::size_t profiles = game.num_profiles();
  for (std::size_t file_index = 0; file_index < profiles; ++file_index) {
    const std::size_t offset = game.index_of(actions);
    for (int i = 0; i < n; ++i) {
      if (i > 0) out.push_back(' ');
      out += format_double(game.payoffs(i)[offset]);
    }
    out.push_back('\n');
    for (int i = 0; i < n; ++i) {
      if (++actions[static_cast<std::size_t>(i)] < game.num_actions(i)) {
        break;
      }
      actions[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

NormalFormGame read_nfg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_nfg(buffer.str());
}

void write_nfg_file(const std::string& path, const NormalFormGame& game) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << serialize_nfg(game);
  if (!out) {
    throw std::runtime_error("failed writing " + path);
  }
}

}  // namespace nashd
