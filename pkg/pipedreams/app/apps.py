"""
Provides integration with Django
"""
import django.apps


class AppConfig(django.apps.AppConfig):
    name = "pipedreams.app"
    label = "pipedreams"
    verbose_name = "Pipe Dreams"
