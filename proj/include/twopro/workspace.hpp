#pragma once

#include <filesystem>
#include <memory>

#include "twopro/kx.hpp"

namespace twopro {

// Loaded artifacts keyed by canonical file path, so that files referring to
// the same host share one instance. Every artifact is validated on load.
class Workspace {
 public:
  Workspace();
  ~Workspace();
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  Fin2CatPtr two_category(const std::filesystem::path& p);
  CatFunctor catvalued(const std::filesystem::path& p);
  TwoFunctor functor(const std::filesystem::path& p);

  struct LoadedPseudoNat {
    CatFunctor F, G;
    PseudoNat theta;
  };
  LoadedPseudoNat pseudonat(const std::filesystem::path& p);

  struct LoadedModification {
    LoadedPseudoNat theta, eta;
    Modification rho;
  };
  LoadedModification modification(const std::filesystem::path& p);

  ProObjectPtr pro_object(const std::filesystem::path& p);
  // The host named by a pro_object or kx diagram file.
  Fin2CatPtr host_of(const std::filesystem::path& p);
  KxDiagram kx_diagram(ProContext& ctx, const std::filesystem::path& p);

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

}  // namespace twopro
