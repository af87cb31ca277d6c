#pragma once

#include "hhorn/error.hpp"
#include "hhorn/var_set.hpp"
#include "hhorn/hypergraph.hpp"
#include "hhorn/horn_cnf.hpp"
#include "hhorn/implicate.hpp"
#include "hhorn/recognition.hpp"
#include "hhorn/key_realization.hpp"
#include "hhorn/iduality.hpp"
#include "hhorn/oracle.hpp"
#include "hhorn/text_format.hpp"
