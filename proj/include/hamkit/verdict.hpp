#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hamkit/graph.hpp"

namespace hamkit {

enum class ObstacleKind {
  // u-v paths and paths from u in 3K1-free graphs
  EndpointIsArticulation,
  SameSideOfArticulation,
  EndpointPairIsTwoCut,
  // Hamiltonian paths (4K1-free and 5K1-free)
  ArticulationWithThreeComponents,
  ArticulationTriangle,
  // paths from u in 4K1-free graphs
  StartIsArticulation,
  CondC,
  CondD,
  CondE,
  CondF,
  // path covers from u and v in 4K1-free graphs
  PcA,
  PcB,
  PcC,
  PcD,
  Disconnected,
  // 5K1-free only
  NoGoodStartInQ2,
  TwoCutWithFourComponents,
};

inline const char* to_string(ObstacleKind k) {
  switch (k) {
    case ObstacleKind::EndpointIsArticulation: return "EndpointIsArticulation";
    case ObstacleKind::SameSideOfArticulation: return "SameSideOfArticulation";
    case ObstacleKind::EndpointPairIsTwoCut: return "EndpointPairIsTwoCut";
    case ObstacleKind::ArticulationWithThreeComponents: return "ArticulationWithThreeComponents";
    case ObstacleKind::ArticulationTriangle: return "ArticulationTriangle";
    case ObstacleKind::StartIsArticulation: return "StartIsArticulation";
    case ObstacleKind::CondC: return "Cond_c";
    case ObstacleKind::CondD: return "Cond_d";
    case ObstacleKind::CondE: return "Cond_e";
    case ObstacleKind::CondF: return "Cond_f";
    case ObstacleKind::PcA: return "PC_a";
    case ObstacleKind::PcB: return "PC_b";
    case ObstacleKind::PcC: return "PC_c";
    case ObstacleKind::PcD: return "PC_d";
    case ObstacleKind::Disconnected: return "Disconnected";
    case ObstacleKind::NoGoodStartInQ2: return "NoGoodStartInQ2";
    case ObstacleKind::TwoCutWithFourComponents: return "TwoCutWithFourComponents";
  }
  return "?";
}

// Certificate that a path or cover cannot exist. `vertices` and `sets`
// have a kind-specific layout, documented where each kind is produced.
struct Obstacle {
  ObstacleKind kind;
  std::vector<Vertex> vertices;
  std::vector<VertexSet> sets;
  std::string detail;
};

template <class W>
class Verdict {
 public:
  static Verdict yes(W w) { return Verdict(std::move(w)); }
  static Verdict no(Obstacle o, std::optional<PathCover> cover = std::nullopt) {
    return Verdict(Negative{std::move(o), std::move(cover)});
  }

  bool is_yes() const { return std::holds_alternative<W>(v_); }
  explicit operator bool() const { return is_yes(); }

  const W& witness() const {
    if (!is_yes()) throw std::logic_error("verdict is No; no witness");
    return std::get<W>(v_);
  }
  const Obstacle& obstacle() const {
    if (is_yes()) throw std::logic_error("verdict is Yes; no obstacle");
    return std::get<Negative>(v_).obstacle;
  }
  // Two-path cover attached to some No verdicts.
  const std::optional<PathCover>& cover() const {
    static const std::optional<PathCover> none;
    return is_yes() ? none : std::get<Negative>(v_).cover;
  }

 private:
  struct Negative {
    Obstacle obstacle;
    std::optional<PathCover> cover;
  };
  explicit Verdict(W w) : v_(std::move(w)) {}
  explicit Verdict(Negative n) : v_(std::move(n)) {}

  std::variant<W, Negative> v_;
};

}  // namespace hamkit
