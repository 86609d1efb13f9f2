#pragma once

#include "twistrim/knot_model.hpp"
#include "twistrim/presentation.hpp"

namespace twistrim {

// Crossing convention: at a positive crossing the outgoing under-arc is
// g_out = g_over g_in g_over^-1; at a negative crossing the conjugation is
// reversed. Relators are stored as g_over^e g_in g_over^-e g_out^-1.
// In a braid, the letter +k is a positive crossing whose over-strand moves
// from position k+1 to position k.

/// One generator per arc of the closed braid, one relator per crossing.
/// The meridian is the arc entering strand 1 at the top. The redundant
/// Wirtinger relator is kept.
GroupPresentation wirtinger_from_braid(const Braid& b);

/// One generator per over-arc, one relator per crossing. Generators are
/// numbered by the smallest edge label they contain, so the arc holding the
/// least label is the meridian g1.
GroupPresentation wirtinger_from_pd(const PDCode& code);

/// Free product of a and b amalgamated along the meridians.
GroupPresentation presentation_connected_sum(const GroupPresentation& a,
                                             const GroupPresentation& b);

/// Presentation of the mirror image's group in terms of its own meridians
/// (every letter inverted). Wirtinger relators keep their shape.
GroupPresentation presentation_mirror(const GroupPresentation& p);

/// True for words x y x^-1 z^-1 with y and z positive letters.
bool is_wirtinger_relator(const Word& w);

/// Lowers any knot expression to a knot-group presentation.
GroupPresentation knot_presentation(const KnotExpr& k);

}  // namespace twistrim
