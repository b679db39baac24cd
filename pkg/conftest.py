import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'splicekit.settings')
django.setup()
