#pragma once

#include "monochar/catalog.hpp"
#include "monochar/character.hpp"
#include "monochar/constructions.hpp"
#include "monochar/lattice.hpp"
#include "monochar/monomiality.hpp"
#include "monochar/report.hpp"
#include "monochar/structure.hpp"
#include "monochar/table_io.hpp"
#include "monochar/verify.hpp"
#include "monochar/workspace.hpp"
