// Umbrella header.

#ifndef SHELF_SHELF_HPP
#define SHELF_SHELF_HPP

#include "shelf/exactfield.hpp"
#include "shelf/tensorspace.hpp"
#include "shelf/linalg.hpp"
#include "shelf/group.hpp"
#include "shelf/rack.hpp"
#include "shelf/lie.hpp"
#include "shelf/coalgebra.hpp"
#include "shelf/shelfmap.hpp"
#include "shelf/yangbaxter.hpp"
#include "shelf/shelfcohomology.hpp"
#include "shelf/hochschild.hpp"
#include "shelf/quandlecoh.hpp"
#include "shelf/liecoh.hpp"
#include "shelf/classify2d.hpp"
#include "shelf/fixtures.hpp"

#endif  // SHELF_SHELF_HPP
