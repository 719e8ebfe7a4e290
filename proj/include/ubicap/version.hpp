#pragma once

#define UBICAP_VERSION "0.1.0"
