# Helper package
