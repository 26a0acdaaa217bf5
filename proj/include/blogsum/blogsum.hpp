#pragma once

#include "blogsum/error.hpp"
#include "blogsum/evaluation.hpp"
#include "blogsum/ingestion.hpp"
#include "blogsum/linguistic.hpp"
#include "blogsum/porter.hpp"
#include "blogsum/scoring.hpp"
#include "blogsum/summarizer.hpp"
