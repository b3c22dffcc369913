#pragma once

#include "shortpres/numth.hpp"

namespace golden17 {

// The worked n = 17 example, transcribed with explicit parentheses.
inline constexpr char const *kAlt17 = R"(generators: a, g, y
b := g^3
z := g^5
h := (b^2 z^a z^(a^-1))^6
x := z (z^a)^-1 z
atil := (z^(a^3))^(z^(a^2) z^a)
c := a^2 (a x)^-2 a
d := z z^((z a)^-2) a^2 (a x)^4 a^5
e := z a^-1 (a x)^2 a^-1
ytil := z^a z^-1 z^a z^(a^2) (z^-1)^(a^-1) z^(a^2)
ztil := ytil^y
xtil := ytil^ztil
u := (z a) (z a)^y
w := xtil u^-2 xtil u^2
relator: a^11 b^-5
relator: (a^-3)^b a^4
relator: (z z^a)^2
relator: atil ((atil h)^y)^-1
relator: c (c^y)^-1
relator: [d,e^y]
relator: y w^-1
)";

inline constexpr char const *kSym17 = R"(generators: a, g, y
b := g^3
z := g^10
h := (b^2 z^a z^(a^2))^6
x := z (z^a)^-1 z
atil := (z^(a^3))^(z^(a^2) z^a)
cdot := a^-5 (a x)^4 a^-5 (a x)^-4 a^-1
v := (cdot z^a (z^-1)^(a^-1) z^a)^5
t := v b^5
c := a^2 (a x)^-3 a^2 t
d := z z^((z a)^-2) a^2 (a x)^4 a^5
e := z a t a^-3 (a x)^3 a^-1
ytil := z^a z^-1 z^a z^(a^2) (z^-1)^(a^-1) z^(a^2)
ztil := ytil^y
xtil := ytil^ztil
u := (z a) (z a)^y
w := xtil u^-2 xtil u^2
relator: a^11 b^-10
relator: (a^-1)^b a^2
relator: (z z^a)^2
relator: atil ((atil h)^y)^-1
relator: c (c^y)^-1
relator: [d,e^y]
relator: y w^-1
)";

inline shortpres::ParamSet worked_params(shortpres::GroupKind kind)
{
  shortpres::ParamSet ps = shortpres::derive_glued_params(17, kind);
  if (kind == shortpres::GroupKind::Alt) {
    ps.r = 5;
    ps.s = 8;
    ps.alpha = 3;
    ps.kappa = 5;
  } else {
    ps.r = 2;
    ps.s = 10;
    ps.alpha = 7;
    ps.kappa = 10;
  }
  return ps;
}

} // namespace golden17
