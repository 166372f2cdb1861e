from hypothesis import HealthCheck, settings

# reproducible property runs: the suite doubles as the acceptance gate
settings.register_profile(
    "repo", derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")
