import os
import subprocess
import sys


def run_cli(
    *args: str, stdin: str | None = None, env_extra: dict[str, str] | None = None
) -> subprocess.CompletedProcess:
    """Run the CLI in a subprocess and capture its streams."""
    env = os.environ.copy()
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "pteseq", *args],
        input=stdin,
        capture_output=True,
        text=True,
        env=env,
    )
