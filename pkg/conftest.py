# SPDX-License-Identifier: GPL-3.0-or-later
# Puts the source tree on sys.path for pytest and sets the hypothesis
# profile shared by the property suites.
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")
