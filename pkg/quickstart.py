#!/usr/bin/env python3
"""
graphnorm Quickstart Script
Cross-platform script to set up a virtual environment and run a first experiment.
"""

import argparse
import platform
import shlex
import shutil
import subprocess
import sys
import venv
from pathlib import Path

VENV_DIR = Path("graphnorm-venv")
SMOKE_COMMAND = "psi-infinity"


def check_python_version():
    """Check if Python version meets minimum requirements."""
    if sys.version_info < (3, 10):  # noqa: UP036
        print("❌ Error: Python 3.10 or higher is required.")
        print(f"   Current version: {sys.version}")
        print("\n   Please upgrade Python and try again.")
        print("   Visit: https://www.python.org/downloads/")
        sys.exit(1)
    print(
        f"✓ Python {sys.version_info.major}.{sys.version_info.minor}.{sys.version_info.micro} detected"
    )


def get_venv_paths(venv_dir: Path):
    """Get the correct paths for venv binaries based on OS."""
    if platform.system() == "Windows":
        bin_dir = venv_dir / "Scripts"
        python_path = bin_dir / "python.exe"
        pip_path = bin_dir / "pip.exe"
        cli_path = bin_dir / "graphnorm.exe"
        activate_cmd = str(bin_dir / "activate.bat")
    else:  # Unix-like (Linux, macOS, etc.)
        bin_dir = venv_dir / "bin"
        python_path = bin_dir / "python"
        pip_path = bin_dir / "pip"
        cli_path = bin_dir / "graphnorm"
        activate_cmd = f"source {bin_dir / 'activate'}"

    return python_path, pip_path, cli_path, activate_cmd


def create_virtualenv(venv_dir: Path):
    """Create a virtual environment."""
    print(f"\n📦 Creating virtual environment at {venv_dir}...")
    try:
        venv.create(venv_dir, with_pip=True)
        print("✓ Virtual environment created successfully")
        return True
    except Exception as e:
        print(f"❌ Error creating virtual environment: {e}")
        return False


def _pip(pip_path: Path, *args: str, label: str) -> bool:
    result = subprocess.run([str(pip_path), "install", *args], capture_output=True, text=True)
    if result.returncode != 0:
        print(f"❌ Error installing {label}:")
        print(result.stderr)
        return False
    print(f"✓ {label.capitalize()} installed")
    return True


def install_dependencies(pip_path: Path, dev_mode: bool = False):
    """Install pinned dependencies and the graphnorm package itself."""
    print("\n📥 Installing dependencies...")

    print("   Installing runtime dependencies from requirements.txt...")
    if not _pip(pip_path, "-r", "requirements.txt", label="runtime dependencies"):
        return False

    print("   Installing the graphnorm package (editable)...")
    if not _pip(pip_path, "-e", ".", label="graphnorm package"):
        return False

    if dev_mode:
        print("   Installing development dependencies from requirements-dev.txt...")
        if not _pip(pip_path, "-r", "requirements-dev.txt", label="development dependencies"):
            return False

    return True


def check_env_file():
    """Create .env from .env.example if it doesn't exist yet."""
    env_file = Path(".env")
    env_example = Path(".env.example")

    if env_file.exists():
        print("✓ .env file found")
        return

    print("\n📝 .env file not found.")
    if not env_example.exists():
        print("   No .env.example either; built-in defaults will be used.")
        return
    try:
        shutil.copy(env_example, env_file)
        print("✓ Created .env from .env.example template")
        print("   Edit it to change tolerances, worker threads or the report directory.")
    except Exception as e:
        print(f"⚠️  Could not copy .env.example: {e}")
        print("   Built-in defaults will be used.")


def run_experiment(cli_path: Path, command: str):
    """Run one graphnorm command and report its exit code."""
    print(f"\n🧪 Running: graphnorm {command}")
    print("=" * 60)

    try:
        result = subprocess.run([str(cli_path.resolve()), *shlex.split(command)])
    except KeyboardInterrupt:
        print("\n\n👋 Run interrupted.")
        return True
    except Exception as e:
        print(f"\n❌ Error launching graphnorm: {e}")
        return False

    if result.returncode == 0:
        print("✓ All checks passed")
    elif result.returncode == 1:
        print("⚠️  Some checks failed; see the table above and graphnorm_debug.log")
    else:
        print("❌ Usage error; see the message above")
    return result.returncode == 0


def main():
    """Main quickstart flow."""
    parser = argparse.ArgumentParser(
        description="graphnorm Quickstart - Automated setup and first experiment"
    )
    parser.add_argument(
        "--dev", action="store_true", help="Install development dependencies (for contributors)"
    )
    parser.add_argument(
        "--skip-run", action="store_true", help="Set up the environment but don't run anything"
    )
    parser.add_argument(
        "--command",
        default=SMOKE_COMMAND,
        help=f"graphnorm command line to run after setup (default: {SMOKE_COMMAND})",
    )
    args = parser.parse_args()

    print("=" * 60)
    print("📐 graphnorm - Quickstart Setup")
    print("=" * 60)

    check_python_version()

    python_path, pip_path, cli_path, activate_cmd = get_venv_paths(VENV_DIR)

    if VENV_DIR.exists() and python_path.exists():
        print(f"✓ Virtual environment already exists at {VENV_DIR}")
        print(f"   Tip: Delete '{VENV_DIR}' folder to recreate from scratch")
    elif not create_virtualenv(VENV_DIR):
        sys.exit(1)

    print("\n⬆️  Upgrading pip...")
    subprocess.run(
        [str(python_path), "-m", "pip", "install", "--upgrade", "pip"], capture_output=True
    )
    print("✓ pip upgraded")

    if not install_dependencies(pip_path, dev_mode=args.dev):
        sys.exit(1)

    check_env_file()

    print("\n" + "=" * 60)
    print("✅ Setup complete!")
    print("=" * 60)

    if args.dev:
        print("\n📝 Development mode enabled. Additional info:")
        print("   • Pre-commit hooks: Run 'pre-commit install' in activated venv")
        print("   • Tests: pytest")
        print("   • Linting: ruff check src/ tests/")
        print("   • Formatting: ruff format src/ tests/")

    print("\n💡 To activate the virtual environment manually:")
    print(f"   {activate_cmd}")
    print("\n💡 To run every experiment later:")
    print(f"   {cli_path} all")

    if not args.skip_run and not run_experiment(cli_path, args.command):
        sys.exit(1)


if __name__ == "__main__":
    main()
