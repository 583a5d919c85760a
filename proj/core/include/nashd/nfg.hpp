#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nashd/game.hpp"

namespace nashd {

// In-file representation of a Gambit payoff-format .nfg document.
//
// Grammar (whitespace of any kind separates tokens):
//   NFG 1 R "<title>" { "<player>" ... } { <action count> ... }
//   <payoff> <payoff> ...
//
// Payoffs are grouped per pure profile, one number per player in player
// order, and profiles are ordered with the FIRST player's action index
// varying fastest. That order differs from the in-memory layout of
// NormalFormGame (player 0 slowest); the parser and serializer remap.
struct NfgDocument {
  std::string title;
  std::vector<std::string> player_names;
  std::vector<int> action_counts;
  std::vector<double> payoffs;  // file order
};

class NfgError : public std::runtime_error {
 public:
  enum class Kind {
    syntax,               // malformed header or structure
    arity,                // payoff count does not match the game shape
    value,                // token where a number was expected
    unsupported_variant,  // outcome-format file
  };

  NfgError(Kind kind, const std::string& message, int line, int column);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

NfgDocument parse_nfg_document(std::string_view text);
NormalFormGame to_game(const NfgDocument& doc);

// parse_nfg_document followed by the layout remap.
NormalFormGame parse_nfg(std::string_view text);

// Emits the payoff-format document for the game, payoffs printed with full
// round-trip precision, one profile group per line. Deterministic;
// parse_nfg(serialize_nfg(g)) reproduces g's payoffs bit-exactly.
std::string serialize_nfg(const NormalFormGame& game);

// File helpers; I/O failures raise std::runtime_error.
NormalFormGame read_nfg_file(const std::string& path);
void write_nfg_file(const std::string& path, const NormalFormGame& game);

}  // namespace nashd
