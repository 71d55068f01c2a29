#pragma once

#define AUTOHINT_VERSION "0.1.0"
